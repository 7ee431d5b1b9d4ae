"""Quaternion orders and ideals in the algebra ramified at p and infinity."""

from .algebra import Quaternion, QuatAlgebra, quat_algebra, nrd, trd
from .lattice import (
    QuatLattice, QuatOrder, QuatIdeal, lattice_sum, lattice_product, lattice_intersection,
    left_order, right_order, right_order_generic, left_order_generic, ideals_of_norm_ell,
    ideal_from_generators, unit_ideal, connecting_ideal, ideals_equivalent,
    equivalence_witness, standard_maximal_order, choose_q, is_order, lattice_from_json,
)
from .types import (
    OrderType, maximal_order_type, types_equal, enumerate_maximal_order_types,
    enumerate_type_records, TypeRecord, is_fp_type, supersingular_class_number,
    eichler_mass, order_mass, gross_lattice,
)
