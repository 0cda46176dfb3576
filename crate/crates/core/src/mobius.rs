//! The group of order six generated by `R: z -> 1/z` and `S: z -> 1 - z`,
//! acting on points of the projective line over `F_p` and on polynomials of a
//! given formal degree `m` through
//! `(Rf)(x) = (-x)^m f(1/x)` and `(Sf)(x) = f(1 - x)`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rings::{AffineMap, DensePoly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MobiusError {
    #[error("degree {degree} exceeds formal degree {formal}")]
    FormalDegree { degree: usize, formal: usize },
    #[error("projection needs 6 to be invertible")]
    SmallCharacteristic,
    #[error("polynomial does not satisfy f(x) = -x^p f(1/x)")]
    NotAntisymmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MobiusElement {
    Id,
    R,
    S,
    RS,
    SR,
    RSR,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    R,
    S,
}

type Matrix = [i64; 4];

fn matmul(a: Matrix, b: Matrix) -> Matrix {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

// projective normalization: first nonzero entry positive
fn normalize(m: Matrix) -> Matrix {
    let lead = m.iter().copied().find(|&v| v != 0).unwrap_or(1);
    if lead < 0 {
        m.map(|v| -v)
    } else {
        m
    }
}

impl MobiusElement {
    pub const ALL: [MobiusElement; 6] = [
        MobiusElement::Id,
        MobiusElement::R,
        MobiusElement::S,
        MobiusElement::RS,
        MobiusElement::SR,
        MobiusElement::RSR,
    ];

    fn word(self) -> &'static [Letter] {
        use Letter::*;
        match self {
            MobiusElement::Id => &[],
            MobiusElement::R => &[R],
            MobiusElement::S => &[S],
            MobiusElement::RS => &[R, S],
            MobiusElement::SR => &[S, R],
            MobiusElement::RSR => &[R, S, R],
        }
    }

    /// `z -> (az + b) / (cz + d)` as `[a, b, c, d]`; words compose as maps, rightmost first.
    pub fn matrix(self) -> [i64; 4] {
        let mut m = [1, 0, 0, 1];
        for l in self.word() {
            let g = match l {
                Letter::R => [0, 1, 1, 0],
                Letter::S => [-1, 1, 0, 1],
            };
            m = matmul(m, g);
        }
        normalize(m)
    }

    /// The product `self · other`.
    pub fn compose(self, other: MobiusElement) -> MobiusElement {
        let m = normalize(matmul(self.matrix(), other.matrix()));
        Self::ALL.into_iter().find(|t| t.matrix() == m).expect("group is closed")
    }

    pub fn inverse(self) -> MobiusElement {
        Self::ALL.into_iter().find(|t| self.compose(*t) == MobiusElement::Id).expect("group")
    }

    pub fn name(self) -> &'static str {
        match self {
            MobiusElement::Id => "1",
            MobiusElement::R => "R",
            MobiusElement::S => "S",
            MobiusElement::RS => "RS",
            MobiusElement::SR => "SR",
            MobiusElement::RSR => "RSR",
        }
    }

    pub fn apply_point(self, z: Point, p: u64) -> Point {
        let [a, b, c, d] = self.matrix().map(|v| v.rem_euclid(p as i64) as u64);
        match z {
            Point::Infinity => {
                if c == 0 {
                    Point::Infinity
                } else {
                    Point::Finite(a * crate::arith::inv_mod(c as i128, p).unwrap() % p)
                }
            }
            Point::Finite(z) => {
                let num = (a * z + b) % p;
                let den = (c * z + d) % p;
                if den == 0 {
                    Point::Infinity
                } else {
                    Point::Finite(num * crate::arith::inv_mod(den as i128, p).unwrap() % p)
                }
            }
        }
    }
}

impl fmt::Display for MobiusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(u64),
    Infinity,
}

/// Orbit of `z` under the six maps.
pub fn orbit(z: Point, p: u64) -> BTreeSet<Point> {
    MobiusElement::ALL.iter().map(|t| t.apply_point(z, p)).collect()
}

fn apply_letter<R: Ring>(l: Letter, f: &DensePoly<R>, m: usize) -> DensePoly<R> {
    match l {
        Letter::R => {
            let r = f.reverse(m).expect("degree checked by caller");
            if m % 2 == 1 {
                r.neg()
            } else {
                r
            }
        }
        Letter::S => f.compose_affine(&AffineMap::OneMinus),
    }
}

/// `T f` at formal degree `m`; composite elements apply their letters right to left.
pub fn act<R: Ring>(t: MobiusElement, f: &DensePoly<R>, m: usize) -> Result<DensePoly<R>, MobiusError> {
    if let Some(d) = f.degree() {
        if d > m {
            return Err(MobiusError::FormalDegree { degree: d, formal: m });
        }
    }
    let mut g = f.clone().with_formal_degree(m).expect("checked");
    for &l in t.word().iter().rev() {
        g = apply_letter(l, &g, m);
    }
    Ok(g)
}

pub fn is_invariant<R: Ring>(f: &DensePoly<R>, m: usize) -> Result<bool, MobiusError> {
    for t in MobiusElement::ALL {
        if act(t, f, m)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(1/6) sum_T T f`.
pub fn project_invariant<R: Ring>(f: &DensePoly<R>, m: usize) -> Result<DensePoly<R>, MobiusError> {
    let sixth = R::from_frac(f.ctx(), 1, 6).ok_or(MobiusError::SmallCharacteristic)?;
    let mut acc = DensePoly::zero(f.ctx().clone()).with_formal_degree(m).expect("zero");
    for t in MobiusElement::ALL {
        acc = acc.add(&act(t, f, m)?);
    }
    Ok(acc.scale(&sixth))
}

/// `x^m f(1 - 1/x)`.
pub fn x_pow_at_one_minus_inv<R: Ring>(f: &DensePoly<R>, m: usize) -> Result<DensePoly<R>, MobiusError> {
    let g = act(MobiusElement::RS, f, m)?;
    Ok(if m % 2 == 1 { g.neg() } else { g })
}

/// For `deg f < p` with `f(x) = -x^p f(1/x)`, the polynomial
/// `x^p f(x) + (1 - x^p) f(1-x) + x^(2p) (1 - x^p) f(1 - 1/x)` of formal degree `3p`.
pub fn build_3p_invariant<R: Ring>(f: &DensePoly<R>, p: usize) -> Result<DensePoly<R>, MobiusError> {
    if f.degree().is_some_and(|d| d >= p) {
        return Err(MobiusError::NotAntisymmetric);
    }
    let ctx = f.ctx().clone();
    let rev = f.reverse(p).expect("degree below p");
    if !f.add(&rev).is_zero() {
        return Err(MobiusError::NotAntisymmetric);
    }
    let one = R::one(&ctx);
    let xp = DensePoly::monomial(one.clone(), p);
    let one_minus_xp = DensePoly::constant(one).sub(&xp);
    let a = f.shift(p);
    let b = one_minus_xp.mul(&f.compose_affine(&AffineMap::OneMinus));
    let c = one_minus_xp.mul(&x_pow_at_one_minus_inv(f, p)?).shift(p);
    let g = a.add(&b).add(&c);
    Ok(g.with_formal_degree(3 * p).expect("degree at most 3p"))
}
