"""Walk through the smallest interesting model by hand.

One box, two rows, three columns: enumerate every open and closed state
for both boundary flags, print the grids, and check the partition
functions against the shifted Demazure character and atom.
"""

from fivevertex import lattice, laurent, weyl
from fivevertex.lattice import ModelSpec

LAM = (1, 0)

GLYPH = {0: "+", 1: "R", 2: "B", 3: "G"}


def ascii_state(state):
    """Rows of the grid with horizontal spins between column positions and
    vertical spins above/below each column (columns printed left to right,
    i.e. in decreasing column label)."""
    spec = state.spec
    lines = []
    for k in range(spec.r + 1):
        row = "   " + "   ".join(GLYPH[state.vertical[k][j]]
                                 for j in range(spec.n - 1, -1, -1))
        lines.append(row)
        if k < spec.r:
            cells = [GLYPH[state.horizontal[k][slot]]
                     for slot in range(spec.n, -1, -1)]
            lines.insert(len(lines), " --".join(cells))
    return "\n".join(lines)


def main():
    rho = laurent.monomial((1, 0))
    for family in ("closed", "open"):
        for w in weyl.all_permutations(2):
            spec = ModelSpec(LAM, w, family)
            states = lattice.enumerate_states(spec)
            z = lattice.partition_function(spec)
            print(f"== {family} model, flag {w}: {len(states)} state(s), "
                  f"Z = {laurent.format_poly(z)}")
            for state in states:
                print(ascii_state(state))
                print(f"   pattern {lattice.gtp_of_state(state)}, "
                      f"weight {laurent.format_poly(lattice.boltzmann(state))}, "
                      f"tableau {lattice.crystal_tableau(state)}")
                print()
            expected = rho * (laurent.demazure_char(LAM, w) if family == "closed"
                              else laurent.demazure_atom(LAM, w))
            status = "matches" if z == expected else "DOES NOT MATCH"
            print(f"   shifted {'character' if family == 'closed' else 'atom'} "
                  f"{laurent.format_poly(expected)} -> {status}\n")


if __name__ == "__main__":
    main()
