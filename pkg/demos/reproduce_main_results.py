"""Tour of the headline result: the discriminator of u is min{2^e, 5^f}.

The sequence u_1 = 2, u_2 = 1, u_j = 2 u_{j-1} + 3 u_{j-2} has the closed
form u_j = (3^j - 5 (-1)^j) / 4.  Its discriminator D(n) — the smallest
modulus m under which u_1, ..., u_n are pairwise distinct — is

    D(n) = min{ 2^e : 2^e >= n } ∪ { 5^f : 4·5^f >= 5n }

and this script recomputes a slice of that by brute force, then verifies
tightness at the range boundaries.  Runs in a few seconds.
"""

from discrim.discriminator import (
    discriminator_brute,
    salajan_discriminator_checked,
    salajan_discriminator_closed,
    table_ranges,
    verify_discriminates,
)
from discrim.sequences import salajan, term_exact

SEQ = salajan()


def show_sequence() -> None:
    terms = [term_exact(SEQ, j) for j in range(1, 11)]
    print("first terms:", ", ".join(map(str, terms)))
    closed = [(3**j - 5 * (-1) ** j) // 4 for j in range(1, 11)]
    print("closed form:", ", ".join(map(str, closed)))
    assert terms == closed
    print()


def closed_equals_brute() -> None:
    print("n    closed  brute   (independent methods)")
    for n in (1, 2, 3, 5, 16, 17, 20, 100, 129, 625):
        closed = salajan_discriminator_closed(n).value
        brute = discriminator_brute(SEQ, n).value
        flag = "ok" if closed == brute else "MISMATCH"
        print(f"{n:<5}{closed:<8}{brute:<8}{flag}")
        assert closed == brute
    record = salajan_discriminator_checked(20)
    print(f"checked(20) -> value {record.value} via {record.method}")
    print()


def value_table() -> None:
    print("value ranges up to 4096 (start..end -> D):")
    for start, end, value in table_ranges(4096):
        kind = "2^e" if value & (value - 1) == 0 else "5^f"
        print(f"  {start:>5}..{end:<5} -> {value:<5} ({kind})")
    print()


def boundary_tightness() -> None:
    print("tightness at a boundary: n = 17 forces D = 25")
    assert verify_discriminates(SEQ, 17, 25)
    failures = [m for m in range(17, 25) if not verify_discriminates(SEQ, 17, m)]
    print(f"  every m in 17..24 fails: {failures == list(range(17, 25))}")
    print("  (m < n always fails by pigeonhole)")


if __name__ == "__main__":
    show_sequence()
    closed_equals_brute()
    value_table()
    boundary_tightness()
