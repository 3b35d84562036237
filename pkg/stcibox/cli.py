#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
命令行入口：python3 -m stcibox.cli <子命令> ...

退出码：0 成功/Certified；1 NotCertified 或 Undetermined；2 输入错误；3 内部恒等式校验失败。
"""

import argparse
import signal
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import yaml

from lib import __version__
from lib.common.errors import InternalInconsistency, StciError, UsageError
from lib.common.rendering import dumps_canonical, to_jsonable
from lib.deform import DeformationCertifier, load_parametrization, one_form_valuation
from lib.deform.value_semigroup import UNDETERMINED
from lib.families import (
    cor44_evaluate,
    family_instance,
    family_parametrization,
    golden_note,
    lemma43_check,
    parse_range,
    rows_to_csv,
    rows_to_jsonl,
    scan,
)
from lib.herzog import (
    defining_equations,
    gs1_forward,
    gs1_is_image,
    gs2_analysis,
    herzog_data,
    lemma3_pair,
)
from lib.numsg import apery_set, contains, gap_data, make_semigroup
from lib.stci import bresinsky_reduce, moh_check, syzygy_check
from stcibox.script_template import ScriptTemplate

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


@dataclass
class CommandResult:
    payload: Dict[str, Any]
    exit_code: int = EXIT_OK
    text: Optional[str] = None
    errors: List[str] = field(default_factory=list)
    quiet: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class StciBox(ScriptTemplate):
    """各子命令的实现，返回 (结果, 退出码)"""

    def __init__(self, env: Optional[str] = None, instance: Optional[str] = None, debug: bool = False):
        super().__init__(env=env, instance=instance, debug=debug)
        self.certifier = DeformationCertifier(self.config)
        self.certifier.set_logger(self.logger)
        self.crosscheck = bool(self.config.get('sympy_crosscheck', False))

    def semigroup(self, ell: int, m: int, n: int):
        S = make_semigroup(ell, m, n)
        gaps = gap_data(S)
        apery = apery_set(S, S.ell)
        return {
            "semigroup": S.to_dict(),
            "gaps": list(gaps.gaps),
            "frobenius": gaps.frobenius,
            "conductor": gaps.conductor,
            "apery": {"w": S.ell, "elements": apery, "conductor": max(apery) - S.ell + 1},
        }, EXIT_OK

    def herzog(self, ell: int, m: int, n: int):
        S = make_semigroup(ell, m, n)
        H = herzog_data(S)
        E = defining_equations(S, H, crosscheck=self.crosscheck)
        result = {"semigroup": S.to_dict(), "herzog": H.to_dict(), "equations": E.to_dict()}
        if H.is_h1:
            result["lemma3_pair"] = list(lemma3_pair(S, H))
            result["gs1"] = list(gs1_forward(H.sextuple))
        elif H.overlap:
            result["overlap_triple"] = list(H.overlap_triple)
        return result, EXIT_OK

    def inverse_gs1(self, sextuple: Sequence[int]):
        ell, m, n, e = gs1_forward(tuple(sextuple))
        return {"triple": [ell, m, n], "e": e, "is_image": gs1_is_image(tuple(sextuple))}, EXIT_OK

    def inverse_gs2(self, a: int, b: int, c: int, a1: int, b2: int):
        analysis = gs2_analysis(a, b, c, a1, b2)
        forward = analysis["forward"]
        return dict(
            analysis,
            triple=[forward["l"], forward["m"], forward["n"]],
            d=forward["d"],
        ), EXIT_OK

    def stci(self, ell: int, m: int, n: int):
        S = make_semigroup(ell, m, n)
        H = herzog_data(S)
        result: Dict[str, Any] = {
            "semigroup": S.to_dict(),
            "case": H.case,
            "moh": moh_check(ell, m, n),
        }
        if not H.is_h1:
            result["bresinsky"] = None
            result["note"] = "情形 H2：单项式曲线本身是完全交"
            return result, EXIT_OK
        E = defining_equations(S, H, crosscheck=self.crosscheck)
        result["equations"] = E.to_dict()
        result["bresinsky"] = bresinsky_reduce(E, H, crosscheck=self.crosscheck).to_dict()
        result["syzygies"] = syzygy_check(E, H)
        return result, EXIT_OK

    def deform(self, path: str, trunc: Optional[int] = None):
        P = load_parametrization(path)
        certificate = self.certifier.certify(P, truncation=trunc)
        result = certificate.to_dict()
        x_tail, y_tail, _ = P.tails
        if not x_tail and len(y_tail) == 1:
            valuation = one_form_valuation(P)
            result["one_form"] = {
                "valuation": valuation,
                "nonisomorphy_witness": not contains(P.semigroup, valuation),
            }
        code = EXIT_OK if certificate.certified else EXIT_NOT_CERTIFIED
        vs = certificate.value_semigroup
        if vs is not None and vs.verdict == UNDETERMINED:
            code = EXIT_NOT_CERTIFIED
        return result, code

    def family(self, a: int, b: int, p: Optional[int] = None, q: Optional[int] = None):
        F = family_instance(a, b, crosscheck=self.crosscheck)
        cor44 = cor44_evaluate(F, p=p, q=q)
        certificate = self.certifier.certify(family_parametrization(F, p=p, q=q))
        result = {
            "instance": F.to_dict(),
            "lemma43": lemma43_check(F).to_dict(),
            "cor44": cor44,
            "moh": moh_check(F.ell, F.m, F.n),
            "certificate": certificate.to_dict(),
        }
        note = golden_note(a, b)
        if note is not None:
            result["note"] = note
        return result, EXIT_OK if certificate.certified else EXIT_NOT_CERTIFIED

    def scan(self, a_range: str, b_range: str, canonical_p: bool = False, workers: Optional[int] = None):
        rows = scan(
            parse_range(a_range), parse_range(b_range),
            mode="canonical_p" if canonical_p else "monomial",
            config=self.config,
            workers=workers if workers is not None else int(self.config.get('scan_workers', 1)),
        )
        valid = [row for row in rows if "skipped" not in row]
        code = EXIT_OK if all(row["verdict"] == "Certified" for row in valid) else EXIT_NOT_CERTIFIED
        return rows, code


def _common_options(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    # 子命令上重复声明，使 --json 等可写在子命令之后；默认值只由顶层给出
    default = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument('--json', action='store_true', help='输出规范 JSON', **default)
    parser.add_argument('--quiet', action='store_true', help='不输出结果，只返回退出码', **default)
    parser.add_argument('--env', type=str, choices=['dev', 'test', 'prod'], help='环境名称 (dev/test/prod)', **default)
    parser.add_argument('--instance', type=str, help='stci 配置实例名称', **default)
    parser.add_argument('--debug', action='store_true', help='启用调试模式', **default)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stcibox", description="数值半群、Herzog 关系与集合论完全交证书")
    _common_options(parser)
    common = _Parser(add_help=False)
    _common_options(common, suppress=True)
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    for name, help_text in (('semigroup', '间隙、导子与 Apéry 集'),
                            ('herzog', '极小关系与定义方程'),
                            ('stci', 'Bresinsky 约化与 Moh 条件')):
        p = sub.add_parser(name, help=help_text, parents=[common])
        for arg in ('L', 'M', 'N'):
            p.add_argument(arg, type=int)

    inverse = sub.add_parser('inverse', help='逆构造', parents=[common])
    inverse_sub = inverse.add_subparsers(dest='construction', parser_class=_Parser)
    inverse_sub.required = True
    gs1 = inverse_sub.add_parser('gs1', help='由 (a1,a2,b1,b2,c1,c2) 求生成元', parents=[common])
    for arg in ('a1', 'a2', 'b1', 'b2', 'c1', 'c2'):
        gs1.add_argument(arg, type=int)
    gs2 = inverse_sub.add_parser('gs2', help='由 (a,b,c,a1,b2) 求生成元', parents=[common])
    for arg in ('a', 'b', 'c', 'a1', 'b2'):
        gs2.add_argument(arg, type=int)

    deform = sub.add_parser('deform', help='形变参数化的证书', parents=[common])
    deform.add_argument('file', type=str)
    deform.add_argument('--trunc', type=int, help='截断阶 T')

    family = sub.add_parser('family', help='族实例 (a,b)', parents=[common])
    family.add_argument('A', type=int)
    family.add_argument('B', type=int)
    family.add_argument('--p', type=int, help='y 的尾项指数')
    family.add_argument('--q', type=int, help='z 的尾项指数')

    scan_parser = sub.add_parser('scan', help='批量扫描族', parents=[common])
    scan_parser.add_argument('a_range', type=str, metavar='A0..A1')
    scan_parser.add_argument('b_range', type=str, metavar='B0..B1')
    scan_parser.add_argument('--canonical-p', action='store_true', help='使用 p = γ−1−ℓ 的形变')
    scan_parser.add_argument('--csv', action='store_true', help='输出 CSV 摘要')
    scan_parser.add_argument('--workers', type=int, help='进程数，默认取配置 scan_workers')
    return parser


def _invoke(box: StciBox, args: argparse.Namespace):
    command = args.command
    if command in ('semigroup', 'herzog', 'stci'):
        echo = {"l": args.L, "m": args.M, "n": args.N}
        return echo, box.run_function(command, ell=args.L, m=args.M, n=args.N)
    if command == 'inverse' and args.construction == 'gs1':
        sextuple = [args.a1, args.a2, args.b1, args.b2, args.c1, args.c2]
        return {"sextuple": sextuple}, box.run_function('inverse_gs1', sextuple=sextuple)
    if command == 'inverse':
        echo = {"a": args.a, "b": args.b, "c": args.c, "a1": args.a1, "b2": args.b2}
        return echo, box.run_function('inverse_gs2', **echo)
    if command == 'deform':
        if args.trunc is not None and args.trunc <= 0:
            raise UsageError(f"--trunc 必须是正整数: {args.trunc}")
        return {"file": args.file, "trunc": args.trunc}, box.run_function('deform', path=args.file, trunc=args.trunc)
    if command == 'family':
        echo = {"a": args.A, "b": args.B, "p": args.p, "q": args.q}
        return echo, box.run_function('family', a=args.A, b=args.B, p=args.p, q=args.q)
    echo = {"a_range": args.a_range, "b_range": args.b_range, "canonical_p": args.canonical_p}
    return echo, box.run_function('scan', a_range=args.a_range, b_range=args.b_range,
                                  canonical_p=args.canonical_p, workers=args.workers)


def _argv_echo(args: argparse.Namespace) -> str:
    return args.command + (f" {args.construction}" if getattr(args, 'construction', None) else "")


def dispatch(argv: Sequence[str]) -> CommandResult:
    """
    解析参数并执行子命令

    Args:
        argv: 命令行参数（不含程序名）

    Returns:
        CommandResult: payload 总是包含 tool_version 与 inputs_echo
    """
    base = {"tool_version": __version__, "inputs_echo": {"argv": list(argv)}}
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as e:
        return CommandResult(payload=dict(base, error=str(e)), exit_code=EXIT_INPUT_ERROR, errors=[str(e)])

    def failure(e: Exception, code: int, message: str) -> CommandResult:
        return CommandResult(payload=dict(base, command=_argv_echo(args), error=str(e)),
                             exit_code=code, errors=[message])

    try:
        box = StciBox(env=args.env, instance=args.instance, debug=args.debug)
    except (StciError, ValueError) as e:
        return failure(e, EXIT_INPUT_ERROR, str(e))
    try:
        echo, (result, code) = _invoke(box, args)
    except InternalInconsistency as e:
        box.logger.exception(f"内部校验失败: {e}")
        return failure(e, EXIT_INTERNAL_ERROR, f"内部错误: {e}")
    except (StciError, ValueError) as e:
        return failure(e, EXIT_INPUT_ERROR, str(e))

    echo = dict(echo, argv=list(argv), env=box.env, instance=box.instance)
    if args.command == 'scan':
        # 扫描结果每行一个 JSON 对象
        rows = [dict(row, tool_version=__version__, inputs_echo=echo) for row in result]
        text = rows_to_csv(result) if args.csv else rows_to_jsonl(rows)
        payload = {"tool_version": __version__, "inputs_echo": echo, "rows": result}
        return CommandResult(payload=payload, exit_code=code, text=text, quiet=args.quiet)

    payload = dict(result, tool_version=__version__, inputs_echo=echo, command=_argv_echo(args))
    if args.json:
        text = dumps_canonical(payload) + "\n"
    else:
        text = yaml.safe_dump(to_jsonable(payload), allow_unicode=True, sort_keys=True)
    return CommandResult(payload=payload, exit_code=code, text=text, quiet=args.quiet)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """主函数"""
    def signal_handler(signum, frame):
        print("\n正在优雅退出...", file=sys.stderr)
        sys.exit(130)

    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)

    argv = list(sys.argv[1:] if argv is None else argv)
    result = dispatch(argv)
    for message in result.errors:
        print(f"错误: {message}", file=sys.stderr)
    if result.text and not result.quiet:
        sys.stdout.write(result.text)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
