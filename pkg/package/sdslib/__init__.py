# Copyright SDSLIB CONTRIBUTORS 2024

import sys

import sdslib.config as cfg
from sdslib.config_logs import init_logging

if not any("pytest" in arg for arg in sys.argv):
    init_logging(cfg.as_dict())

from sdslib.enums import (
    EquivMode,
    Side,
    ExistenceStatus,
    ParamStatus,
    WitnessSource,
    StrategyKind,
)
from sdslib.sequence import (
    Sequence,
    Subset,
    PafVector,
    SpectrumVector,
    paf,
    psd,
    dft,
    subset_norm,
    associated_sequence,
)
from sdslib.params import SdsParams, ConstantsPair, validate_params, verify_sds, sds_constants
from sdslib.compress import Content, CompressionSpec, compress, case_split
from sdslib.enumeration import necklaces, bracelets, charmed_bracelets
from sdslib.symmetry import orbit_canonical, count_classes, normal_form
