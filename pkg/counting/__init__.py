# init for counting folder containing formulas.py, fan_parallel.py, and oracle.py
from .formulas import (
    DProvenance,
    CountReport,
    binom3,
    theorem1_count,
    two_vertex_count,
    symmetric_count,
    generic_count,
    theorem2_count,
    theorem2_closed_form,
    theorem2_prime_form,
)
from .fan_parallel import (
    FanBreakdown,
    fan_parallel_breakdown,
    fan_parallel_count,
    classify_fan_triples,
)
from .oracle import (
    TripleClass,
    TriangleTally,
    OracleResult,
    AffineCheck,
    intersection_table,
    classify_triple,
    enumerate_triangles,
    verify_config,
    verify_affine_invariance,
)
