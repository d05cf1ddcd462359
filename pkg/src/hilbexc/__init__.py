"""Exact combinatorics for equivariant exceptional collections on cartesian powers,
the truncated universal ideal functor, and twist-group actions."""

from ._accel import COMPILED
from .collection import ExceptionalCollection, classify_strength, cy_lift_ext, is_spherical_lift, validate, with_serre_omega
from .functorcalc import FormalKernel, GeometricInput, compose_kernels, euler_consistency, grg, pn_condition1_check
from .gvs import ONE, ZERO, GradedDim, SignedLaurent, dual, graded_trace, shift, sym_power, tensor
from .induce import InducedLabel, enumerate_labels, equivariant_ext, lhd_compare, sequence_length, verify_sequence
from .symrep import mn_character, partitions

__version__ = "0.1.0"
