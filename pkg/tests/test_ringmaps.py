import pytest
from hypothesis import given, settings

from completion_kit.parse import poly_parse
from completion_kit.poly import RingMismatchError, RingSpec
from completion_kit.ringmaps import (
    MembershipCertificate,
    check_certificate,
    in_determinantal_ideal,
    segre_context,
)
from polygen import polynomials

AUX = list("stuvwxyz")


def test_segre_context():
    ctx = segre_context()
    assert ctx.source.variables == ("a", "b", "c", "d")
    assert ctx.target.variables == ("g", "h", "j", "k")
    assert ctx.hom(ctx.relation()).is_zero
    full = segre_context(AUX)
    assert full.source.nvars == 12
    for name in AUX:
        assert full.hom.image(name) == full.target.var(name)
    with pytest.raises(ValueError):
        segre_context(["a"])
    with pytest.raises(ValueError):
        segre_context(["g", "s"])


@pytest.mark.parametrize(
    "text, member",
    [
        ("a*d - b*c", True),
        ("a", False),
        ("a^2*d^2 - b^2*c^2", True),
        ("0", True),
        ("1", False),
        ("b", False),
        ("c", False),
        ("d", False),
        ("a*b", False),
        ("c*d", False),
        ("a^2", False),
        ("a*d + b*c", False),
    ],
)
def test_membership(text, member):
    ctx = segre_context()
    assert in_determinantal_ideal(ctx, poly_parse(text, ctx.source)) is member


def test_membership_ring_mismatch():
    ctx = segre_context()
    with pytest.raises(RingMismatchError):
        in_determinantal_ideal(ctx, RingSpec(["a"]).var("a"))


CTX = segre_context(["s"])


@given(polynomials(CTX.source, max_degree=3))
@settings(max_examples=80)
def test_multiples_of_relation_are_members(q):
    assert in_determinantal_ideal(CTX, q * CTX.relation())


@given(polynomials(CTX.source, max_degree=3), polynomials(CTX.source, max_degree=3))
@settings(max_examples=80)
def test_certificate_agrees_with_segre(q, extra):
    rel = CTX.relation()
    cert = MembershipCertificate([(q, rel)])
    assert check_certificate(q * rel, cert)
    assert in_determinantal_ideal(CTX, q * rel)
    # anything the certificate accepts must also pass the Segre test
    target = q * rel + extra
    if check_certificate(target, cert):
        assert in_determinantal_ideal(CTX, target)


def test_certificate_examples():
    R = RingSpec(list("abcdpqr"))
    p = poly_parse("a*b - (a^2*(p*b + q*d) + b^2*(q*a + r*c))", R)
    unimod = poly_parse("p*a + q*b + q*c + r*d - 1", R)
    det = poly_parse("a*d - b*c", R)
    good = MembershipCertificate([(poly_parse("-a*b", R), unimod), (poly_parse("r*b - q*a", R), det)])
    assert check_certificate(p, good)
    # the sign-flipped second cofactor is not a valid certificate
    flipped = MembershipCertificate([(poly_parse("-a*b", R), unimod), (poly_parse("q*a - r*b", R), det)])
    assert not check_certificate(p, flipped)
    assert check_certificate(R.zero(), MembershipCertificate([(R.zero(), unimod)]))
    assert not check_certificate(R.var("a"), MembershipCertificate([(R.one(), R.var("b"))]))


def test_certificate_validation():
    R = RingSpec(["a"])
    with pytest.raises(ValueError):
        MembershipCertificate([])
    with pytest.raises(RingMismatchError):
        MembershipCertificate([(R.one(), RingSpec(["b"]).var("b"))])
