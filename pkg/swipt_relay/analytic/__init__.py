from .capacity import (
    capacity_c1,
    capacity_c1_exact,
    capacity_c2,
    capacity_c2_exact,
    ergodic_capacity,
    noncooperative_capacity,
)
from .outage import (
    chebyshev_log_integral,
    diversity_order,
    noncooperative_outage,
    outage_p1,
    outage_p21,
    outage_p221,
    outage_p222,
    outage_probability,
)

__all__ = [
    "capacity_c1",
    "capacity_c1_exact",
    "capacity_c2",
    "capacity_c2_exact",
    "chebyshev_log_integral",
    "diversity_order",
    "ergodic_capacity",
    "noncooperative_capacity",
    "noncooperative_outage",
    "outage_p1",
    "outage_p21",
    "outage_p221",
    "outage_p222",
    "outage_probability",
]
