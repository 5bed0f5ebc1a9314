//! Polynomial data for the parametrization and the level-3 decompositions.
//!
//! Strings use the crate's polynomial grammar. `phi` is in `t1, t2, t3`
//! (affine chart `t0 = 1`), the inverse representatives are forms in
//! `y0..y4`, and the decomposition triples `(H, lambda, G)` live in
//! `Q(a1, a2, a3, a4)[X]` with `(x, z) = (X, 1)`.

/// Components `y0..y4` of the parametrization.
pub const PHI: [&str; 5] = [
    "t1^3-3*t1^2*t3-3*t1*t2^2-3*t1*t2*t3-t2^3-1",
    "-t1^3+3*t1^2*t3-3*t1*t3^2+t2^3+1",
    "-t1^4+t1^3*t2+3*t1^3*t3-3*t1^2*t2*t3-3*t1^2*t3^2-2*t1*t2^3-3*t1*t2^2*t3+t1-t2^4-t2",
    "-t1^4+4*t1^3*t3+3*t1^2*t2^2+3*t1^2*t2*t3-3*t1^2*t3^2+t1*t2^3-3*t1*t2^2*t3-3*t1*t2*t3^2\
     +t1-t2^3*t3-t3",
    "-t1^4-t1^3*t2+2*t1^3*t3+3*t1^2*t2*t3+t1*t2^3+3*t1*t2^2*t3+t1+t2^4+t2^3*t3+t2+t3",
];

/// Four representatives `(t0 : t1 : t2 : t3)` of the inverse map.
pub const PSIS: [[&str; 4]; 4] = [
    [
        "y0^3-y0^2*y1+y0*y1^2",
        "-y0^2*y3-y0^2*y4+y0*y1*y2",
        "y0^2*y2-y0*y1*y2+y0*y1*y3+y0*y1*y4",
        "-y0^2*y4+y0*y1*y2-y0*y1*y3+y1^2*y3",
    ],
    [
        "3*y0*y2^2*y4-3*y0*y3^2*y4+3*y0*y3*y4^2-3*y0*y4^3-3*y1*y2^2*y4-3*y1*y2*y3*y4-3*y1*y2*y4^2",
        "-3*y0^3*y4-3*y0^2*y1*y4-3*y2^3*y4-3*y2^2*y3*y4-3*y2^2*y4^2",
        "3*y0^2*y1*y4+3*y0*y1^2*y4+3*y2^3*y4-3*y2*y3^2*y4+3*y2*y3*y4^2-3*y2*y4^3",
        "y0^3*y2+y0^3*y3-2*y0^3*y4-3*y0^2*y1*y4+y1^3*y2+y1^3*y3+y1^3*y4+y2^4+y2^3*y3-2*y2^3*y4\
     -3*y2^2*y4^2+y2*y3^3+y2*y4^3+y3^4-2*y3^3*y4+3*y3^2*y4^2-2*y3*y4^3+y4^4",
    ],
    [
        "3*y0^2*y2*y4-3*y0*y1*y2*y4+3*y1^2*y2*y4",
        "-3*y0*y2*y3*y4-3*y0*y2*y4^2+3*y1*y2^2*y4",
        "3*y0*y2^2*y4-3*y1*y2^2*y4+3*y1*y2*y3*y4+3*y1*y2*y4^2",
        "-y0^3*y1-3*y0*y2*y4^2-y1^4-y1*y2^3+3*y1*y2^2*y4-3*y1*y2*y3*y4-y1*y3^3-y1*y4^3",
    ],
    [
        "-y0^2*y2*y3-y0^2*y2*y4-y0^2*y3^2+y0^2*y3*y4-y0^2*y4^2-y0*y1*y2^2+y0*y1*y3^2-y0*y1*y3*y4\
     +y0*y1*y4^2",
        "y0^2*y1^2+y0*y1^3+y0*y2*y3^2+2*y0*y2*y3*y4+y0*y2*y4^2+y0*y3^3+y0*y4^3+3*y1*y2*y3*y4",
        "y0^3*y1-y0*y1^3-y0*y2^2*y3-y0*y2^2*y4-y0*y2*y3^2+y0*y2*y3*y4-y0*y2*y4^2-3*y1*y2*y3*y4",
        "y0^2*y1^2+y0*y1^3+y0*y2*y3*y4+y0*y2*y4^2+y0*y3^2*y4-y0*y3*y4^2+y0*y4^3-y1*y2^2*y3\
     +3*y1*y2*y3*y4+y1*y3^3-y1*y3^2*y4+y1*y3*y4^2",
    ],
];

/// `(H, lambda, G)` for the order-3 subgroups marked by `y0 = yi = 0`, i = 1..4.
pub const HLGS: [[&str; 3]; 4] = [
    [
        "(a1^3*a3*a4^3+a1^2*a2^2*a4^5+a1^2*a2^2*a4^2+2*a1*a2*a3^2*a4^4-a1*a2*a3^2*a4-a2^3*a3\
     +a3^4*a4^3)*X^2+(a1^4*a4^4+2*a1^2*a2*a3*a4^5-a1^2*a2*a3*a4^2+2*a1*a2^3*a4^4+a1*a2^3*a4\
     +2*a1*a3^3*a4^4+a1*a3^3*a4+2*a2^2*a3^2*a4^3+2*a2^2*a3^2)*X+a1^3*a2*a4^3+a1^2*a3^2*a4^5\
     +a1^2*a3^2*a4^2+2*a1*a2^2*a3*a4^4-a1*a2^2*a3*a4+a2^4*a4^3-a2*a3^3",
        "(-a4^3-1)/(a1^6*a4^6-6*a1^4*a2*a3*a4^4-2*a1^3*a2^3*a4^3-2*a1^3*a3^3*a4^3\
     +9*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3*a3^3+a3^6)",
        "(a1^6*a4^6+3*a1^4*a2*a3*a4^7-3*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^9+4*a1^3*a2^3*a4^6\
     +3*a1^3*a3^3*a4^6+a1^3*a3^3*a4^3+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a3^2*a4^5\
     +6*a1^2*a2^2*a3^2*a4^2-3*a1*a2^4*a3*a4^4+3*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4^7+a2^6\
     -3*a2^3*a3^3*a4^3-a2^3*a3^3+2*a3^6*a4^6+a3^6*a4^3)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3\
     -a3^3)*X^3+(3*a1^5*a2*a4^8+3*a1^5*a2*a4^5+6*a1^4*a3^2*a4^7+6*a1^4*a3^2*a4^4\
     +6*a1^3*a2^2*a3*a4^9+6*a1^3*a2^2*a3*a4^6+6*a1^2*a2^4*a4^8+9*a1^2*a2^4*a4^5\
     +3*a1^2*a2^4*a4^2+12*a1^2*a2*a3^3*a4^8+3*a1^2*a2*a3^3*a4^5-9*a1^2*a2*a3^3*a4^2\
     +12*a1*a2^3*a3^2*a4^7+9*a1*a2^3*a3^2*a4^4-3*a1*a2^3*a3^2*a4+6*a1*a3^5*a4^7\
     +6*a1*a3^5*a4^4-3*a2^5*a3*a4^3-3*a2^5*a3+6*a2^2*a3^4*a4^6+9*a2^2*a3^4*a4^3\
     +3*a2^2*a3^4)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X^2+(3*a1^5*a3*a4^8+3*a1^5*a3*a4^5\
     +6*a1^4*a2^2*a4^7+6*a1^4*a2^2*a4^4+6*a1^3*a2*a3^2*a4^9+6*a1^3*a2*a3^2*a4^6\
     +12*a1^2*a2^3*a3*a4^8+3*a1^2*a2^3*a3*a4^5-9*a1^2*a2^3*a3*a4^2+6*a1^2*a3^4*a4^8\
     +9*a1^2*a3^4*a4^5+3*a1^2*a3^4*a4^2+6*a1*a2^5*a4^7+6*a1*a2^5*a4^4+12*a1*a2^2*a3^3*a4^7\
     +9*a1*a2^2*a3^3*a4^4-3*a1*a2^2*a3^3*a4+6*a2^4*a3^2*a4^6+9*a2^4*a3^2*a4^3+3*a2^4*a3^2\
     -3*a2*a3^5*a4^3-3*a2*a3^5)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)*X+(a1^6*a4^6\
     +3*a1^4*a2*a3*a4^7-3*a1^4*a2*a3*a4^4+3*a1^3*a2^3*a4^6+a1^3*a2^3*a4^3+2*a1^3*a3^3*a4^9\
     +4*a1^3*a3^3*a4^6+6*a1^2*a2^2*a3^2*a4^8+3*a1^2*a2^2*a3^2*a4^5+6*a1^2*a2^2*a3^2*a4^2\
     +6*a1*a2^4*a3*a4^7-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4+2*a2^6*a4^6+a2^6*a4^3\
     -3*a2^3*a3^3*a4^3-a2^3*a3^3+a3^6)/(a1^3*a4^3-3*a1*a2*a3*a4-a2^3-a3^3)",
    ],
    [
        "a1*a4*X^2+a2*X-a3",
        "-a1^3*a4^9-a1^3*a4^6+3*a1*a2*a3*a4^7+3*a1*a2*a3*a4^4+a2^3*a4^6+a2^3*a4^3+a3^3*a4^6\
     +a3^3*a4^3",
        "(2*a1^3*a4^6+a1^3*a4^3-3*a1*a2*a3*a4^4+a2^3-a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5\
     +3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a4^2\
     +3*a2*a3^2*a4^3+3*a2*a3^2)*X-a1^3*a4^3-3*a1*a2*a3*a4^4-a2^3*a4^3-2*a3^3*a4^3-a3^3",
    ],
    [
        "a2*X^2-a3*X-a1*a4",
        "a1^3*a4^9+a1^3*a4^6-3*a1*a2*a3*a4^7-3*a1*a2*a3*a4^4-a2^3*a4^6-a2^3*a4^3-a3^3*a4^6\
     -a3^3*a4^3",
        "(a1^3*a4^3+3*a1*a2*a3*a4^4+2*a2^3*a4^3+a2^3+a3^3*a4^3)*X^3+(3*a1^2*a2*a4^5\
     +3*a1^2*a2*a4^2-3*a2^2*a3*a4^3-3*a2^2*a3)*X^2+(-3*a1^2*a3*a4^5-3*a1^2*a3*a4^2\
     +3*a2*a3^2*a4^3+3*a2*a3^2)*X-2*a1^3*a4^6-a1^3*a4^3+3*a1*a2*a3*a4^4+a2^3*a4^3-a3^3",
    ],
    [
        "(a1*a2^2*a4^3+a1*a2^2)*X^2+(a1^3*a4^2+a1*a2*a3*a4^3-2*a1*a2*a3+a2^3*a4^2+a3^3*a4^2)*X\
     +a1*a3^2*a4^3+a1*a3^2",
        "(-a1^3*a4^3+3*a1*a2*a3*a4+a2^3+a3^3)/(a1^6+6*a1^4*a2*a3*a4+2*a1^3*a2^3+2*a1^3*a3^3\
     +9*a1^2*a2^2*a3^2*a4^2+6*a1*a2^4*a3*a4+6*a1*a2*a3^4*a4+a2^6+2*a2^3*a3^3+a3^6)",
        "(a1^6*a4^3+6*a1^4*a2*a3*a4^4+2*a1^3*a2^3*a4^6+5*a1^3*a2^3*a4^3+a1^3*a2^3\
     +2*a1^3*a3^3*a4^3+9*a1^2*a2^2*a3^2*a4^5+3*a1*a2^4*a3*a4^4-3*a1*a2^4*a3*a4\
     +6*a1*a2*a3^4*a4^4-a2^6+a2^3*a3^3*a4^3-a2^3*a3^3+a3^6*a4^3)/(a1^3+3*a1*a2*a3*a4+a2^3\
     +a3^3)*X^3+(3*a1^5*a2*a4^5+3*a1^5*a2*a4^2+3*a1^3*a2^2*a3*a4^6-3*a1^3*a2^2*a3\
     +3*a1^2*a2^4*a4^5+3*a1^2*a2^4*a4^2+3*a1^2*a2*a3^3*a4^5+3*a1^2*a2*a3^3*a4^2\
     +9*a1*a2^3*a3^2*a4^4+9*a1*a2^3*a3^2*a4+3*a2^5*a3*a4^3+3*a2^5*a3+3*a2^2*a3^4*a4^3\
     +3*a2^2*a3^4)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X^2+(-3*a1^5*a3*a4^5-3*a1^5*a3*a4^2\
     -3*a1^3*a2*a3^2*a4^6+3*a1^3*a2*a3^2-3*a1^2*a2^3*a3*a4^5-3*a1^2*a2^3*a3*a4^2\
     -3*a1^2*a3^4*a4^5-3*a1^2*a3^4*a4^2-9*a1*a2^2*a3^3*a4^4-9*a1*a2^2*a3^3*a4\
     -3*a2^4*a3^2*a4^3-3*a2^4*a3^2-3*a2*a3^5*a4^3-3*a2*a3^5)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)*X\
     +(-a1^6*a4^3-6*a1^4*a2*a3*a4^4-2*a1^3*a2^3*a4^3-2*a1^3*a3^3*a4^6-5*a1^3*a3^3*a4^3\
     -a1^3*a3^3-9*a1^2*a2^2*a3^2*a4^5-6*a1*a2^4*a3*a4^4-3*a1*a2*a3^4*a4^4+3*a1*a2*a3^4*a4\
     -a2^6*a4^3-a2^3*a3^3*a4^3+a2^3*a3^3+a3^6)/(a1^3+3*a1*a2*a3*a4+a2^3+a3^3)",
    ],
];

/// `(H, lambda, G)` with `G^2 + 4*lambda*H^3 = -3*F`, marked by `y0 + ... + y4 = y0 + y4 = 0`.
pub const HLG_DUAL: [&str; 3] = [
    "(a1^2*a4^2+a1*a2*a4^3-a1*a2*a4^2-a1*a2*a4-a1*a3*a4^2+a2^2+a2*a3*a4+a3^2*a4^2)*X^2+(\
     -a1^2*a4^3+a1^2*a4^2+a1*a2*a4^3+a1*a2*a4+a1*a3*a4^3+a1*a3*a4+a2^2*a4^2-a2^2*a4-2*a2*a3\
     +a3^2*a4^2-a3^2*a4)*X+a1^2*a4^2-a1*a2*a4^2+a1*a3*a4^3-a1*a3*a4^2-a1*a3*a4+a2^2*a4^2\
     +a2*a3*a4+a3^2",
    "(-3*a1^2*a4^4+3*a1^2*a4^3-3*a1^2*a4^2-3*a1*a2*a4^3+3*a1*a2*a4^2-3*a1*a2*a4-3*a1*a3*a4^3\
     +3*a1*a3*a4^2-3*a1*a3*a4-3*a2^2*a4^2+3*a2^2*a4-3*a2^2+3*a2*a3*a4^2-3*a2*a3*a4+3*a2*a3\
     -3*a3^2*a4^2+3*a3^2*a4-3*a3^2)/(a1^2*a4^4+2*a1^2*a4^3+a1^2*a4^2-2*a1*a2*a4^3\
     -4*a1*a2*a4^2-2*a1*a2*a4-2*a1*a3*a4^3-4*a1*a3*a4^2-2*a1*a3*a4+a2^2*a4^2+2*a2^2*a4+a2^2\
     +2*a2*a3*a4^2+4*a2*a3*a4+2*a2*a3+a3^2*a4^2+2*a3^2*a4+a3^2)",
    "(-3*a1^4*a4^5+3*a1^4*a4^4-6*a1^3*a2*a4^6+6*a1^3*a2*a4^5-3*a1^3*a2*a4^4-3*a1^3*a2*a4^3\
     +6*a1^3*a3*a4^5-3*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6+6*a1^2*a2^2*a4^4\
     +6*a1^2*a2^2*a4^2+3*a1^2*a2*a3*a4^6-3*a1^2*a2*a3*a4^5+6*a1^2*a2*a3*a4^4\
     +6*a1^2*a2*a3*a4^3-6*a1^2*a2*a3*a4^2-6*a1^2*a3^2*a4^5+6*a1^2*a3^2*a4^4-6*a1^2*a3^2*a4^3\
     -6*a1*a2^3*a4^4+6*a1*a2^3*a4^3-3*a1*a2^3*a4^2-3*a1*a2^3*a4-3*a1*a2^2*a3*a4^5\
     +3*a1*a2^2*a3*a4^4-6*a1*a2^2*a3*a4^3-6*a1*a2^2*a3*a4^2+6*a1*a2^2*a3*a4+9*a1*a2*a3^2*a4^5\
     -3*a1*a2*a3^2*a4^4-6*a1*a2*a3^2*a4^3+6*a1*a2*a3^2*a4^2+3*a1*a3^3*a4^5-3*a1*a3^3*a4^4\
     +6*a1*a3^3*a4^3-3*a2^4*a4+3*a2^4-6*a2^3*a3*a4^2+3*a2^3*a3*a4-3*a2^3*a3-6*a2^2*a3^2*a4^3\
     +6*a2^2*a3^2*a4^2-6*a2^2*a3^2*a4-3*a2*a3^3*a4^4+3*a2*a3^3*a4^3-6*a2*a3^3*a4^2\
     +3*a3^4*a4^4-3*a3^4*a4^3)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X^3+(6*a1^4*a4^6-6*a1^4*a4^5\
     +6*a1^4*a4^4+3*a1^3*a2*a4^7-9*a1^3*a2*a4^6+12*a1^3*a2*a4^5-9*a1^3*a2*a4^4+3*a1^3*a2*a4^3\
     -6*a1^3*a3*a4^6+12*a1^3*a3*a4^5-12*a1^3*a3*a4^4+6*a1^3*a3*a4^3+3*a1^2*a2^2*a4^6\
     -15*a1^2*a2^2*a4^5+18*a1^2*a2^2*a4^4-15*a1^2*a2^2*a4^3+3*a1^2*a2^2*a4^2\
     +9*a1^2*a2*a3*a4^6-9*a1^2*a2*a3*a4^5+9*a1^2*a2*a3*a4^3-9*a1^2*a2*a3*a4^2\
     +6*a1^2*a3^2*a4^6-12*a1^2*a3^2*a4^5+18*a1^2*a3^2*a4^4-12*a1^2*a3^2*a4^3+6*a1^2*a3^2*a4^2\
     +12*a1*a2^3*a4^5-6*a1*a2^3*a4^4+12*a1*a2^3*a4^3+6*a1*a2^3*a4+3*a1*a2^2*a3*a4^5\
     +3*a1*a2^2*a3*a4^4+3*a1*a2^2*a3*a4^2+3*a1*a2^2*a3*a4+6*a1*a2*a3^2*a4^5\
     -12*a1*a2*a3^2*a4^4+6*a1*a2*a3^2*a4^2-12*a1*a2*a3^2*a4+6*a1*a3^3*a4^5-12*a1*a3^3*a4^4\
     +12*a1*a3^3*a4^3-6*a1*a3^3*a4^2-6*a2^4*a4^3+6*a2^4*a4^2-6*a2^4*a4-3*a2^3*a3*a4^4\
     +3*a2^3*a3*a4^3-12*a2^3*a3*a4^2+9*a2^3*a3*a4-9*a2^3*a3+9*a2^2*a3^2*a4^4-9*a2^2*a3^2*a4^3\
     +18*a2^2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2+12*a2*a3^3*a4^3-12*a2*a3^3*a4^2\
     +12*a2*a3^3*a4+6*a3^4*a4^4-6*a3^4*a4^3+6*a3^4*a4^2)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4\
     -a3)*X^2+(6*a1^4*a4^6-6*a1^4*a4^5+6*a1^4*a4^4-6*a1^3*a2*a4^6+12*a1^3*a2*a4^5\
     -12*a1^3*a2*a4^4+6*a1^3*a2*a4^3+3*a1^3*a3*a4^7-9*a1^3*a3*a4^6+12*a1^3*a3*a4^5\
     -9*a1^3*a3*a4^4+3*a1^3*a3*a4^3+6*a1^2*a2^2*a4^6-12*a1^2*a2^2*a4^5+18*a1^2*a2^2*a4^4\
     -12*a1^2*a2^2*a4^3+6*a1^2*a2^2*a4^2+9*a1^2*a2*a3*a4^6-9*a1^2*a2*a3*a4^5\
     +9*a1^2*a2*a3*a4^3-9*a1^2*a2*a3*a4^2+3*a1^2*a3^2*a4^6-15*a1^2*a3^2*a4^5\
     +18*a1^2*a3^2*a4^4-15*a1^2*a3^2*a4^3+3*a1^2*a3^2*a4^2+6*a1*a2^3*a4^5-12*a1*a2^3*a4^4\
     +12*a1*a2^3*a4^3-6*a1*a2^3*a4^2+6*a1*a2^2*a3*a4^5-12*a1*a2^2*a3*a4^4+6*a1*a2^2*a3*a4^2\
     -12*a1*a2^2*a3*a4+3*a1*a2*a3^2*a4^5+3*a1*a2*a3^2*a4^4+3*a1*a2*a3^2*a4^2+3*a1*a2*a3^2*a4\
     +12*a1*a3^3*a4^5-6*a1*a3^3*a4^4+12*a1*a3^3*a4^3+6*a1*a3^3*a4+6*a2^4*a4^4-6*a2^4*a4^3\
     +6*a2^4*a4^2+12*a2^3*a3*a4^3-12*a2^3*a3*a4^2+12*a2^3*a3*a4+9*a2^2*a3^2*a4^4\
     -9*a2^2*a3^2*a4^3+18*a2^2*a3^2*a4^2-9*a2^2*a3^2*a4+9*a2^2*a3^2-3*a2*a3^3*a4^4\
     +3*a2*a3^3*a4^3-12*a2*a3^3*a4^2+9*a2*a3^3*a4-9*a2*a3^3-6*a3^4*a4^3+6*a3^4*a4^2\
     -6*a3^4*a4)/(a1*a4^2+a1*a4-a2*a4-a2-a3*a4-a3)*X+(-3*a1^4*a4^5+3*a1^4*a4^4+6*a1^3*a2*a4^5\
     -3*a1^3*a2*a4^4+3*a1^3*a2*a4^3-6*a1^3*a3*a4^6+6*a1^3*a3*a4^5-3*a1^3*a3*a4^4\
     -3*a1^3*a3*a4^3-6*a1^2*a2^2*a4^5+6*a1^2*a2^2*a4^4-6*a1^2*a2^2*a4^3+3*a1^2*a2*a3*a4^6\
     -3*a1^2*a2*a3*a4^5+6*a1^2*a2*a3*a4^4+6*a1^2*a2*a3*a4^3-6*a1^2*a2*a3*a4^2\
     +6*a1^2*a3^2*a4^6+6*a1^2*a3^2*a4^4+6*a1^2*a3^2*a4^2+3*a1*a2^3*a4^5-3*a1*a2^3*a4^4\
     +6*a1*a2^3*a4^3+9*a1*a2^2*a3*a4^5-3*a1*a2^2*a3*a4^4-6*a1*a2^2*a3*a4^3+6*a1*a2^2*a3*a4^2\
     -3*a1*a2*a3^2*a4^5+3*a1*a2*a3^2*a4^4-6*a1*a2*a3^2*a4^3-6*a1*a2*a3^2*a4^2+6*a1*a2*a3^2*a4\
     -6*a1*a3^3*a4^4+6*a1*a3^3*a4^3-3*a1*a3^3*a4^2-3*a1*a3^3*a4+3*a2^4*a4^4-3*a2^4*a4^3\
     -3*a2^3*a3*a4^4+3*a2^3*a3*a4^3-6*a2^3*a3*a4^2-6*a2^2*a3^2*a4^3+6*a2^2*a3^2*a4^2\
     -6*a2^2*a3^2*a4-6*a2*a3^3*a4^2+3*a2*a3^3*a4-3*a2*a3^3-3*a3^4*a4+3*a3^4)/(a1*a4^2+a1*a4\
     -a2*a4-a2-a3*a4-a3)",
];
