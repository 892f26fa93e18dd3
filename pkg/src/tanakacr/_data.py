"""Printed coefficient data: Pfaffian forms and structure equations as text."""

# rank 16 distribution with E_II symmetry, u1..u8 of weight 2
E2_FORMS = [
    "d(u1)+1/2*(x1*d(y4)+x2*d(y3)+x3*d(y2)+x4*d(y1)-y1*d(x4)-y2*d(x3)-y3*d(x2)-y4*d(x1))",
    "d(u2)+1/2*(x1*d(y6)+x2*d(y5)+x5*d(y2)+x6*d(y1)-y1*d(x6)-y2*d(x5)-y5*d(x2)-y6*d(x1))",
    "d(u3)+1/2*(x1*d(x7)-x3*d(x5)+x5*d(x3)-x7*d(x1)+y1*d(y7)-y3*d(y5)+y5*d(y3)-y7*d(y1))",
    "d(u4)+1/2*(x1*d(x8)+x2*d(x7)+x3*d(x6)+x4*d(x5)-x5*d(x4)-x6*d(x3)-x7*d(x2)-x8*d(x1)+y1*d(y8)+y2*d(y7)+y3*d(y6)+y4*d(y5)-y5*d(y4)-y6*d(y3)-y7*d(y2)-y8*d(y1))",
    "d(u5)+1/2*(y1*d(x8)-y2*d(x7)-y3*d(x6)+y4*d(x5)+y5*d(x4)-y6*d(x3)-y7*d(x2)+y8*d(x1)-x1*d(y8)+x2*d(y7)+x3*d(y6)-x4*d(y5)-x5*d(y4)+x6*d(y3)+x7*d(y2)-x8*d(y1))",
    "d(u6)+1/2*(x2*d(x8)-x4*d(x6)+x6*d(x4)-x8*d(x2)+y2*d(y8)-y4*d(y6)+y6*d(y4)-y8*d(y2))",
    "d(u7)+1/2*(x3*d(y8)+x4*d(y7)+x7*d(y4)+x8*d(y3)-y3*d(x8)-y4*d(x7)-y7*d(x4)-y8*d(x3))",
    "d(u8)+1/2*(x5*d(y8)+x6*d(y7)+x7*d(y6)+x8*d(y5)-y5*d(x8)-y6*d(x7)-y7*d(x6)-y8*d(x5))",
]

# rank 16 distribution with E_III symmetry
E3_FORMS = [
    "d(u1)+x1*d(y8)+x2*d(y4)+x3*d(y7)+x4*d(y2)+x5*d(y6)+x6*d(y5)+x7*d(y3)+x8*d(y1)",
    "d(u2)+x1*d(y4)+y8*d(x2)+y6*d(x3)+x4*d(y1)+x5*d(y7)+y3*d(x6)+x7*d(y5)+y2*d(x8)",
    "d(u3)+x1*d(y7)+x2*d(y6)+y8*d(x3)+y5*d(x4)+y4*d(x5)+x6*d(y2)+x7*d(y1)+y3*d(x8)",
    "d(u4)+x2*d(x1)+x5*d(x3)+x8*d(x4)+x7*d(x6)+y2*d(y1)+y5*d(y3)+y8*d(y4)+y7*d(y6)",
    "d(u5)+x1*d(y6)+y7*d(x2)+x3*d(y4)+x4*d(y3)+y8*d(x5)+x6*d(y1)+y2*d(x7)+y5*d(x8)",
    "d(u6)+x5*d(x1)+x3*d(x2)+x4*d(x7)+x8*d(x6)+y5*d(y1)+y3*d(y2)+y4*d(y7)+y8*d(y6)",
    "d(u7)+x3*d(x1)+x2*d(x5)+x6*d(x4)+x8*d(x7)+y3*d(y1)+y2*d(y5)+y6*d(y4)+y8*d(y7)",
    "d(u8)+x1*d(y1)+x2*d(y2)+x3*d(y3)+x4*d(y4)+x5*d(y5)+x6*d(y6)+x7*d(y7)+x8*d(y8)",
]

# dλ^A as (sign, B, C) triples meaning sign λ^B∧λ^C, coframe λ^{8+i} = dx^i, λ^{16+i} = dy^i
E2_STRUCTURE = {
    1: [(1, 9, 20), (1, 10, 19), (1, 11, 18), (1, 12, 17)],
    2: [(1, 9, 22), (1, 10, 21), (1, 13, 18), (1, 14, 17)],
    3: [(1, 9, 15), (-1, 11, 13), (1, 17, 23), (-1, 19, 21)],
    4: [(1, 9, 16), (1, 10, 15), (1, 11, 14), (1, 12, 13), (1, 17, 24), (1, 18, 23), (1, 19, 22), (1, 20, 21)],
    5: [(-1, 9, 24), (1, 10, 23), (1, 11, 22), (-1, 12, 21), (-1, 13, 20), (1, 14, 19), (1, 15, 18), (-1, 16, 17)],
    6: [(1, 10, 16), (-1, 12, 14), (1, 18, 24), (-1, 20, 22)],
    7: [(1, 11, 24), (1, 12, 23), (1, 15, 20), (1, 16, 19)],
    8: [(1, 13, 24), (1, 14, 23), (1, 15, 22), (1, 16, 21)],
}

E3_STRUCTURE = {
    1: [(1, 9, 24), (1, 10, 20), (1, 11, 23), (1, 12, 18), (1, 13, 22), (1, 14, 21), (1, 15, 19), (1, 16, 17)],
    2: [(1, 9, 20), (1, 24, 10), (1, 22, 11), (1, 12, 17), (1, 13, 23), (1, 19, 14), (1, 15, 21), (1, 18, 16)],
    3: [(1, 9, 23), (1, 10, 22), (1, 24, 11), (1, 21, 12), (1, 20, 13), (1, 14, 18), (1, 15, 17), (1, 19, 16)],
    4: [(1, 10, 9), (1, 13, 11), (1, 16, 12), (1, 15, 14), (1, 18, 17), (1, 21, 19), (1, 24, 20), (1, 23, 22)],
    5: [(1, 9, 22), (1, 23, 10), (1, 11, 20), (1, 12, 19), (1, 24, 13), (1, 14, 17), (1, 18, 15), (1, 21, 16)],
    6: [(1, 13, 9), (1, 11, 10), (1, 12, 15), (1, 16, 14), (1, 21, 17), (1, 19, 18), (1, 20, 23), (1, 24, 22)],
    7: [(1, 11, 9), (1, 10, 13), (1, 14, 12), (1, 16, 15), (1, 19, 17), (1, 18, 21), (1, 22, 20), (1, 24, 23)],
    8: [(1, 9, 17), (1, 10, 18), (1, 11, 19), (1, 12, 20), (1, 13, 21), (1, 14, 22), (1, 15, 23), (1, 16, 24)],
}

# defining functions Im w^i = Φ^i(x, y) with E_II symmetry
E2_PHI = [
    "x2*x3 + x1*x4 + y2*y3 + y1*y4",
    "x2*x5 + x1*x6 + y2*y5 + y1*y6",
    "x7*y1 - x5*y3 + x3*y5 - x1*y7",
    "x8*y1 + x7*y2 + x6*y3 + x5*y4 - x4*y5 - x3*y6 - x2*y7 - x1*y8",
    "x2*x7 + x3*x6 - x1*x8 - x4*x5 + y2*y7 + y3*y6 - y1*y8 - y4*y5",
    "x8*y2 - x6*y4 + x4*y6 - x2*y8",
    "x4*x7 + x3*x8 + y4*y7 + y3*y8",
    "x6*x7 + x5*x8 + y6*y7 + y5*y8",
]

# two unlabelled blocks on x1..x8
STRAY_1 = [
    "d(x8-x7-1/4*(x1^2+x2^2+x3^2+x4^2))+1/2*(x2*d(x1)-x1*d(x2)+x4*d(x3)-x3*d(x4))",
    "d(x8-x5-1/4*(x1^2+x2^2+x3^2+x4^2))+1/2*(x3*d(x1)-x1*d(x3)+x2*d(x4)-x4*d(x2))",
    "d(x8-x6-1/4*(x1^2+x2^2+x3^2+x4^2))+1/2*(x4*d(x1)-x1*d(x4)+x3*d(x2)-x2*d(x3))",
]

STRAY_2 = [
    "d(x8-x7+x6+x5)+x2*d(x1)-x1*d(x2)+x4*d(x3)-x3*d(x4)",
    "d(x8+x7+x6-x5)+x3*d(x1)-x1*d(x3)+x2*d(x4)-x4*d(x2)",
    "d(x8+x7-x6+x5)+x4*d(x1)-x1*d(x4)+x3*d(x2)-x2*d(x3)",
]
