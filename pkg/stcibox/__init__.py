# -*- coding: utf-8 -*-
"""
stcibox 命令层：脚本模板与命令行入口
"""
