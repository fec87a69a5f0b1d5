"""Reversible integer-divider synthesis, simulation and cost estimation."""

from .adders import (
    ADDERS,
    AdderBuilder,
    AdderFragment,
    ControlledFragment,
    build_cond_add,
    build_cuccaro,
    build_vbe,
    get_adder,
    wrap_add_sub,
    wrap_subtractor,
)
from .circuit import (
    Circuit,
    CircuitError,
    Gate,
    Register,
    ResourceReport,
    ccx,
    cx,
    measure,
    x,
)
from .costs import (
    BASELINES,
    CEIL_REAL_LOG,
    ROW_IDS,
    STRICT_FLOOR,
    comparison_table,
    compose,
    evaluate_row,
    omega,
    rounding_audit,
)
from .divider import (
    KINDS,
    NON_RESTORING,
    RESTORING,
    DividerLayout,
    DividerParams,
    build_divider,
    crosscheck_counts,
    make_params,
    run_division,
    verify_exhaustive,
)
from .qasm import QasmExportError, QasmParseError, export_text, import_text
from .sim import SimulationError, apply, apply_packed, decode_register, encode_register

__version__ = "0.1.0"
