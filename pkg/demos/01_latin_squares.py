"""Mutually orthogonal Latin squares of prime order.

One affine rule generates the whole family: the entry in row j, column k
of the i-th square is j + i*(k-1) mod n.  For prime n, any two distinct
slopes i give orthogonal squares: superimposing them produces every
ordered pair of symbols exactly once.
"""

from squaregap import are_orthogonal, build_mols_family


def show_family(n):
    family = build_mols_family(n)
    print(f"order {n}: {len(family.squares)} squares")
    for i, sq in enumerate(family.squares, start=1):
        print(f"\nL_{i} (slope {i})")
        for row in sq.entries:
            print("  " + " ".join(f"{x:2d}" for x in row))
    return family


def show_superposition(a, b):
    """Print the ordered pairs; orthogonality means no pair repeats."""
    n = a.order
    print("\nsuperposition of L_1 and L_2:")
    for j in range(1, n + 1):
        cells = [f"({a(j, k)},{b(j, k)})" for k in range(1, n + 1)]
        print("  " + " ".join(cells))
    pairs = {(a(j, k), b(j, k)) for j in range(1, n + 1) for k in range(1, n + 1)}
    print(f"distinct pairs: {len(pairs)} of {n * n}")


def main():
    family = show_family(3)
    show_superposition(family.squares[0], family.squares[1])

    print("\norder 7, pairwise orthogonality:")
    family = build_mols_family(7)
    for x in range(len(family.squares)):
        row = []
        for y in range(len(family.squares)):
            if x == y:
                row.append(".")
            else:
                row.append("+" if are_orthogonal(family.squares[x], family.squares[y]) else "!")
        print("  " + " ".join(row))


if __name__ == "__main__":
    main()
