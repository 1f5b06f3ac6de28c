from ._core import (  # noqa: F401
    CostReport,
    DriverOptions,
    InfeasibleInstanceError,
    Instance,
    OracleResult,
    Partition,
    Solution,
    SubroutineConfig,
    SubroutineStats,
    centroid,
    check_extended_triangle,
    check_feasibility,
    check_four_point,
    count_compositions,
    dist_d,
    evaluate_cost_d,
    exact_hckm,
    exact_km,
    generate_blobs,
    list_compositions,
    ratio_bound,
    run_subroutine,
    solution_to_json,
    solve_hckm,
)
