//! Exact arithmetic in a real quadratic extension `Q(√D)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

/// Binary operation selector for [`quad_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// The number `a + b·√D` with rational `a`, `b` and a fixed positive radicand `D`.
///
/// `D` is kept as given (no squarefree reduction), so `√8` stays `√8`. When `D`
/// is a perfect square the irrational part is folded into `a`, which keeps the
/// representation unique and makes the norm vanish only at zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive, got {d}");
        let root = d.sqrt();
        if &root * &root == d {
            let a = a + b * BigRational::from_integer(root);
            return QuadExt {
                a,
                b: BigRational::zero(),
                d,
            };
        }
        QuadExt { a, b, d }
    }

    /// `(a + b√D) / den` from integers.
    pub fn from_ints(a: i64, b: i64, den: i64, d: i64) -> Self {
        let den = BigInt::from(den);
        QuadExt::new(
            BigRational::new(BigInt::from(a), den.clone()),
            BigRational::new(BigInt::from(b), den),
            BigInt::from(d),
        )
    }

    pub fn rational(q: BigRational, d: BigInt) -> Self {
        QuadExt::new(q, BigRational::zero(), d)
    }

    pub fn integer(k: impl Into<BigInt>, d: BigInt) -> Self {
        QuadExt::rational(BigRational::from_integer(k.into()), d)
    }

    pub fn zero(d: BigInt) -> Self {
        QuadExt::integer(0, d)
    }

    pub fn one(d: BigInt) -> Self {
        QuadExt::integer(1, d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    fn check(&self, other: &QuadExt) -> Result<(), LinalgError> {
        if self.d != other.d {
            return Err(LinalgError::RadicandMismatch {
                left: self.d.clone(),
                right: other.d.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QuadExt) -> Result<QuadExt, LinalgError> {
        self.check(other)?;
        Ok(QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d: self.d.clone(),
        })
    }

    pub fn try_sub(&self, other: &QuadExt) -> Result<QuadExt, LinalgError> {
        self.check(other)?;
        Ok(QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        })
    }

    pub fn try_mul(&self, other: &QuadExt) -> Result<QuadExt, LinalgError> {
        self.check(other)?;
        let d = BigRational::from_integer(self.d.clone());
        Ok(QuadExt {
            a: &self.a * &other.a + &self.b * &other.b * d,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d.clone(),
        })
    }

    pub fn try_div(&self, other: &QuadExt) -> Result<QuadExt, LinalgError> {
        self.check(other)?;
        let inv = other.inverse()?;
        self.try_mul(&inv)
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> QuadExt {
        QuadExt {
            a: &self.a * q,
            b: &self.b * q,
            d: self.d.clone(),
        }
    }

    /// Field norm `a² − b²D`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    /// Field trace `2a`.
    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    pub fn inverse(&self) -> Result<QuadExt, LinalgError> {
        if self.is_zero() {
            return Err(LinalgError::DivisionByZero);
        }
        let norm = self.norm();
        Ok(QuadExt {
            a: &self.a / &norm,
            b: -&self.b / &norm,
            d: self.d.clone(),
        })
    }

    pub fn pow(&self, exp: u32) -> QuadExt {
        let mut acc = QuadExt::one(self.d.clone());
        for _ in 0..exp {
            acc = acc.try_mul(self).expect("same radicand");
        }
        acc
    }

    /// The nontrivial automorphism `√D ↦ −√D`.
    pub fn galois_conjugate(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// Sign of the real embedding, decided with rational arithmetic only.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: compare a² against b²D
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// Exact comparison of real embeddings.
    pub fn try_cmp(&self, other: &QuadExt) -> Result<Ordering, LinalgError> {
        Ok(self.try_sub(other)?.signum())
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::INFINITY);
        ratio_to_f64(&self.a) + ratio_to_f64(&self.b) * d.sqrt()
    }

    /// Renders as `(p+q√D)/L` with a common denominator, e.g. `(39+9√13)/2`.
    pub fn pretty(&self) -> String {
        let den = self.a.denom().lcm(self.b.denom());
        let p = (&self.a * BigRational::from_integer(den.clone())).to_integer();
        let q = (&self.b * BigRational::from_integer(den.clone())).to_integer();
        let body = if q.is_zero() {
            p.to_string()
        } else {
            let surd = if q.is_one() {
                format!("√{}", self.d)
            } else if q == -BigInt::one() {
                format!("-√{}", self.d)
            } else {
                format!("{q}√{}", self.d)
            };
            if p.is_zero() {
                surd
            } else if q.is_negative() {
                format!("{p}{surd}")
            } else {
                format!("{p}+{surd}")
            }
        };
        if den.is_one() {
            body
        } else if q.is_zero() || p.is_zero() {
            format!("{body}/{den}")
        } else {
            format!("({body})/{den}")
        }
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    // to_f64 on huge numerators and denominators can overflow to inf/inf
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => q.to_f64().unwrap_or(f64::NAN),
    }
}

/// Serialized form `a/b + c/d*sqrt(D)`; the surd term is omitted when zero.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -&self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

pub fn quad_arith(x: &QuadExt, y: &QuadExt, op: QuadOp) -> Result<QuadExt, LinalgError> {
    match op {
        QuadOp::Add => x.try_add(y),
        QuadOp::Sub => x.try_sub(y),
        QuadOp::Mul => x.try_mul(y),
        QuadOp::Div => x.try_div(y),
    }
}

pub fn galois_conjugate(x: &QuadExt) -> QuadExt {
    x.galois_conjugate()
}
