"""Ladder regions: boundary functions, matrix masks, and border pieces.

An upper ladder inside a (b+1) x (a+1) matrix of indeterminates keeps the
entries toward the bottom-right and zeroes out a staircase block at the
top-left.  The surviving region, drawn in the plane with matrix entry (i, j)
at the point (j, b - i), is described by a weakly increasing boundary
function f: column x keeps the points with 0 <= y < f(x).
"""

from laddergf import ladder_from_mask, partition_border, validate_ladder

# the running example throughout these demos: a 14-column, 16-row ladder
ladder = validate_ladder(
    a=13, b=15,
    values=[7, 7, 7, 7, 10, 11, 12, 13, 16, 16, 16, 16, 16, 16],
)

print("boundary values f(0..13):", list(ladder.values))
print("left extension, f(-5) =", ladder.value(-5))
print("(4, 9) in region:", ladder.contains((4, 9)))
print("(4, 10) in region:", ladder.contains((4, 10)))

# the same region as a matrix mask, top row first
print("\nmask ('#' = surviving entry):")
for row in ladder.to_mask():
    print("   ", "".join("#" if cell else "." for cell in row))

# masks round-trip, so regions can be entered in either form
assert ladder_from_mask(ladder.to_mask()) == ladder

# the border splits into maximal horizontal and diagonal pieces; the
# recursive generating-function method peels these from the right
print("\nborder pieces:")
for piece in partition_border(ladder):
    span = f"columns {piece.x_lo + 1}..{piece.x_hi}"
    if piece.kind == "horizontal":
        print(f"    {span}: horizontal at level {piece.level}")
    else:
        print(f"    {span}: diagonal, f(x) = x + {piece.level} + 1")
