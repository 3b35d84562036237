# -*- coding: utf-8 -*-
"""
特殊族 (ℓ,m,n) = (b+2, 2a+1, ab+b+1)：实例构造、导子界、证书条款与批量扫描
"""

from lib.families.family import (  # noqa: F401
    FamilyInstance,
    Lemma43Check,
    cor44_evaluate,
    family_instance,
    family_parametrization,
    lemma43_check,
)
from lib.families.examples import GOLDEN_NOTES, golden_note  # noqa: F401
from lib.families.scan import parse_range, rows_to_csv, rows_to_jsonl, scan  # noqa: F401
