"""Exact polynomial determinantal identities and unimodular row completion."""

from .catalog import VerificationReport, run_all, verify
from .completion import (
    CompletionCertificate,
    RowInstance,
    complete_row,
    find_certificate,
    integer_roots,
    verify_completion,
)
from .linalg import PolyMatrix, determinant, mat_apply_hom
from .parse import ParseError, UnknownVariableError, poly_parse
from .poly import Homomorphism, Polynomial, RingSpec, hom_apply, poly_format, ring_new
from .ringmaps import MembershipCertificate, check_certificate, in_determinantal_ideal, segre_context

__version__ = "0.1.0"
