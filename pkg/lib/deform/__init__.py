# -*- coding: utf-8 -*-
"""
形变参数化、值半群、关系提升与集合论完全交证书
"""

from lib.deform.parametrization import (  # noqa: F401
    Parametrization,
    load_parametrization,
    make_parametrization,
    parametrization_from_dict,
)
from lib.deform.value_semigroup import ValueSemigroupResult, value_semigroup  # noqa: F401
from lib.deform.lift import LiftResult, lift_relations  # noqa: F401
from lib.deform.one_form import cor44_nonisomorphy_witness, one_form_valuation  # noqa: F401
from lib.deform.certificate import (  # noqa: F401
    DeformationCertifier,
    Inequality,
    StciCertificate,
    certify_stci,
    default_truncation,
)
