"""Belief-function combination rules (Dempster, Yager, Dubois-Prade, SACR, PCR, ...),
pignistic decisions, and the sequential ESM target-identification scenario."""

from ._core import (
    Degenerate,
    Error,
    FrameMismatch,
    InfeasibleConfig,
    InvalidArgument,
    InvalidBeta,
    InvalidMass,
    MassFunction,
    ParseError,
    ScenarioConfig,
    ScenarioRun,
    TotalConflict,
    TrajectoryRecord,
    acr_generic,
    betp,
    combine,
    conflict,
    conjunctive,
    decide,
    dempster,
    disjunctive,
    dsmh,
    dubois_prade,
    inagaki_extreme,
    inagaki_generic,
    pcr,
    rules,
    run_scenario,
    sacr,
    sacr_coefficients,
    smets,
    vacuous,
    yager,
)

__all__ = [name for name in dir() if not name.startswith("_")]
