"""Reference tables for the three worked examples, frozen as literals."""
from ssw.construct import SolomonStifflerSpec, ss_generator
from ssw.field import make_field
from ssw.matrix import Subspace

# q=3, k=3, one plane <(1,1,0),(0,1,1)> removed: [18, 3, 12]
EX1_SWD = {1: {12: 12, 18: 1}, 2: {16: 9, 18: 4}, 3: {18: 1}}
EX1_A2 = {0: 1, 12: 96, 16: 432, 18: 200}
EX1_A2_PROJ = {0: 1, 6: 96, 8: 432, 9: 200}
EX1_HIER = (12, 16, 18)
EX1_HIER_PROJ = (6, 8, 9)

# q=2, k=6, punctures of dims 2 and 3: [53, 6, 26]
EX2_SWD = {
    1: {26: 42, 28: 14, 30: 6, 32: 1},
    2: {39: 168, 40: 252, 41: 84, 42: 133, 44: 7, 45: 4, 46: 3},
    3: {46: 336, 47: 714, 48: 231, 49: 85, 50: 28, 53: 1},
    4: {50: 378, 51: 244, 52: 21, 53: 8},
    5: {52: 53, 53: 10},
    6: {53: 1},
}
EX2_A3 = {
    0: 1, 26: 294, 28: 98, 30: 42, 32: 7, 39: 7056, 40: 10584, 41: 3528, 42: 5586, 44: 294,
    45: 168, 46: 56574, 47: 119952, 48: 38808, 49: 14280, 50: 4704, 53: 168,
}  # fmt: skip
EX2_HIER = (26, 39, 46, 50, 52, 53)

# q=3, k=4, punctures <(2,1,0,0)> and <(1,1,0,0),(1,0,1,0)>: [70, 4, 46]
EX3_SWD = {
    1: {46: 24, 48: 12, 52: 3, 54: 1},
    2: {62: 72, 64: 53, 66: 4, 70: 1},
    3: {68: 35, 70: 5},
    4: {70: 1},
}
# printed without the constant term
EX3_A2_PRINTED = {46: 192, 48: 96, 52: 24, 54: 8, 62: 3456, 64: 2544, 66: 192, 70: 48}
EX3_A2_PROJ_PRINTED = {23: 192, 24: 96, 26: 24, 27: 8, 31: 3456, 32: 2544, 33: 192, 35: 48}
EX3_HIER = (46, 62, 68, 70)
EX3_HIER_PROJ = (23, 31, 34, 35)

EX1_BASES = [[[1, 1, 0], [0, 1, 1]]]
EX3_BASES = [[[2, 1, 0, 0]], [[1, 1, 0, 0], [1, 0, 1, 0]]]


def _eye(k, start, u):
    return [[int(c == start + r) for c in range(k)] for r in range(u)]


def example(n, projective=False):
    """(spec, code) for worked example n."""
    if n == 1:
        f, k, bases = make_field(3), 3, EX1_BASES
    elif n == 2:
        f, k, bases = make_field(2), 6, [_eye(6, 0, 2), _eye(6, 2, 3)]
    else:
        f, k, bases = make_field(3), 4, EX3_BASES
    spec = SolomonStifflerSpec(f, k, [Subspace.span(f, k, b) for b in bases], projective=projective)
    return spec, ss_generator(spec)
