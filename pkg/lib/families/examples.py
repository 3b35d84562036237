# -*- coding: utf-8 -*-
"""
族中已知实例的结论（由坐标变换或自同构论证得到，不在此计算，只作为回归数据与扫描注记）
"""

from typing import Any, Dict, Optional

GOLDEN_NOTES: Dict[tuple, Dict[str, Any]] = {
    (2, 2): {
        "curve": "(t^4, t^5, t^7)",
        "conductor": 7,
        "deformation": "(t^4, t^5 + s*t^6, t^7)",
        "certificate_holds": True,
        "trivial": True,
        "note": "证书成立；唯一可容许的形变经坐标变换 x~ = x + 4s/5·y 同构于单项式曲线",
    },
    (3, 2): {
        "curve": "(t^4, t^7, t^9)",
        "deformation": "(t^4, t^7, t^9 + s*t^10)",
        "trivial": False,
        "note": "条款 (c) 不适用 (b=2)；由自同构没有二次项的论证得到与单项式芽不同构",
    },
    (3, 3): {
        "curve": "(t^5, t^7, t^13)",
        "conductor": 17,
        "deformation": "(t^5, t^7 + s2*t^11 + s3*t^16, t^13 + s4*t^16)",
        "min_p": 9,
        "trivial": False,
        "note": "由 (c) 取 p=11 得到非平凡的集合论完全交",
    },
    (8, 3): {
        "curve": "(t^5, t^17, t^28)",
        "conductor": 47,
        "deformation": "(t^5, t^17 + s*t^18, t^28)",
        "min_p": 19,
        "value_semigroup_extra": [46],
        "flat": False,
        "flat_lift": "(t^5, t^17 + s*t^18, t^28, t^46)",
        "note": "该形变不平坦，值半群为 Γ∪{46}；同构于四维空间中平坦形变的一般纤维",
    },
}


def golden_note(a: int, b: int) -> Optional[Dict[str, Any]]:
    """返回 (a,b) 的已知结论，没有时为 None"""
    note = GOLDEN_NOTES.get((a, b))
    return dict(note) if note is not None else None
