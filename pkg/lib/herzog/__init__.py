# -*- coding: utf-8 -*-
"""
Herzog 极小关系、行列式表示与逆构造模块
"""

from lib.herzog.relations import (  # noqa: F401
    HerzogData,
    herzog_data,
    lemma3_pair,
)
from lib.herzog.equations import (  # noqa: F401
    DefiningEquations,
    defining_equations,
    maximal_minors,
)
from lib.herzog.inverse import (  # noqa: F401
    gs1_forward,
    gs1_is_image,
    gs2_forward,
    gs2_analysis,
    gs2_is_image,
    submaximal_minors,
)
