//! Expression trees evaluated either in the truncated p-adic kernel or exactly.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ArithError, PadicApprox, PadicContext};

#[derive(Clone, Debug)]
pub enum Expr {
    Padic(PadicApprox),
    Rational(BigRational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

#[allow(clippy::should_implement_trait)]
impl Expr {
    pub fn rational(n: i64, d: i64) -> Self {
        Expr::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn add(a: Expr, b: Expr) -> Self {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Self {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Self {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Self {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn pow(a: Expr, e: i32) -> Self {
        Expr::Pow(Box::new(a), e)
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Padic(_) | Expr::Rational(_) => 0,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                1 + a.depth().max(b.depth())
            }
            Expr::Pow(a, _) => 1 + a.depth(),
        }
    }
}

fn guard_check(x: PadicApprox) -> Result<PadicApprox, ArithError> {
    let ctx = x.ctx();
    if !x.is_zero() && x.lost() > ctx.g() {
        return Err(ArithError::PrecisionExhausted {
            needed: ctx.digits(),
            available: x.absolute_precision().unwrap_or(0),
        });
    }
    Ok(x)
}

/// Evaluates in the p-adic kernel. Rational leaves enter with full relative precision.
pub fn padic_eval(expr: &Expr, ctx: PadicContext) -> Result<PadicApprox, ArithError> {
    match expr {
        Expr::Padic(x) => Ok(*x),
        Expr::Rational(q) => Ok(PadicApprox::from_rational(ctx, q)),
        Expr::Add(a, b) => guard_check(padic_eval(a, ctx)?.add(&padic_eval(b, ctx)?)),
        Expr::Sub(a, b) => guard_check(padic_eval(a, ctx)?.sub(&padic_eval(b, ctx)?)),
        Expr::Mul(a, b) => Ok(padic_eval(a, ctx)?.mul(&padic_eval(b, ctx)?)),
        Expr::Div(a, b) => padic_eval(a, ctx)?.div(&padic_eval(b, ctx)?),
        Expr::Pow(a, e) => padic_eval(a, ctx)?.pow(*e),
    }
}

/// Exact rational evaluation; the oracle for [`padic_eval`].
pub fn exact_eval(expr: &Expr) -> Result<BigRational, ArithError> {
    match expr {
        Expr::Padic(_) => Err(ArithError::InexactLeaf),
        Expr::Rational(q) => Ok(q.clone()),
        Expr::Add(a, b) => Ok(exact_eval(a)? + exact_eval(b)?),
        Expr::Sub(a, b) => Ok(exact_eval(a)? - exact_eval(b)?),
        Expr::Mul(a, b) => Ok(exact_eval(a)? * exact_eval(b)?),
        Expr::Div(a, b) => {
            let d = exact_eval(b)?;
            if d.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            Ok(exact_eval(a)? / d)
        }
        Expr::Pow(a, e) => {
            let base = exact_eval(a)?;
            if *e < 0 && base.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            let mut acc = BigRational::one();
            for _ in 0..e.unsigned_abs() {
                acc *= &base;
            }
            Ok(if *e < 0 { acc.recip() } else { acc })
        }
    }
}
