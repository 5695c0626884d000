//! Integers extended by a primitive prime-order root of unity.
//!
//! For prime k the powers 1, w, ..., w^(k-2) are an integral basis of
//! Z[w], so an element is zero iff its canonical coefficient vector is
//! zero. That is the whole point of requiring k prime: nonvanishing of
//! hypergraph polynomial sums becomes decidable by normal form.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

use super::Ring;
use crate::error::{Error, Result};

/// a_0 + a_1 w + ... + a_(k-2) w^(k-2), reduced by
/// w^(k-1) = -(1 + w + ... + w^(k-2)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    k: u32,
    coeffs: Vec<BigInt>,
}

pub fn is_prime(k: u32) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl CyclotomicInt {
    pub fn zero(k: u32) -> Result<Self> {
        if !is_prime(k) {
            return Err(Error::NotPrime(k));
        }
        Ok(CyclotomicInt {
            k,
            coeffs: vec![BigInt::zero(); (k - 1) as usize],
        })
    }

    pub fn one(k: u32) -> Result<Self> {
        let mut z = Self::zero(k)?;
        z.coeffs[0] = BigInt::from(1);
        Ok(z)
    }

    pub fn from_int(k: u32, v: i64) -> Result<Self> {
        let mut z = Self::zero(k)?;
        z.coeffs[0] = BigInt::from(v);
        Ok(z)
    }

    /// w^j for any j >= 0 (reduced mod k, then to the canonical basis).
    pub fn omega_pow(k: u32, j: u32) -> Result<Self> {
        let mut z = Self::zero(k)?;
        let j = j % k;
        if j == k - 1 {
            for c in z.coeffs.iter_mut() {
                *c = BigInt::from(-1);
            }
        } else {
            z.coeffs[j as usize] = BigInt::from(1);
        }
        Ok(z)
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            Err(Error::MixedOrder(self.k, other.k))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicInt { k: self.k, coeffs })
    }

    pub fn neg(&self) -> Self {
        CyclotomicInt {
            k: self.k,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Product in the canonical basis. Convolution gives powers up to
    /// 2k-4; each power >= k-1 is folded back with w^k = 1 and
    /// w^(k-1) = -(1 + ... + w^(k-2)).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let deg = (self.k - 1) as usize;
        let mut raw = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut out = vec![BigInt::zero(); deg];
        for (p, v) in raw.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if p < deg {
                out[p] += v;
            } else if p == deg {
                // w^(k-1): subtract v from every basis coefficient
                for c in out.iter_mut() {
                    *c -= &v;
                }
            } else {
                // p in k .. 2k-4 wraps to w^(p-k), always a basis power
                out[p - self.k as usize] += v;
            }
        }
        Ok(CyclotomicInt { k: self.k, coeffs: out })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale_int(&self, v: &BigInt) -> Self {
        CyclotomicInt {
            k: self.k,
            coeffs: self.coeffs.iter().map(|c| c * v).collect(),
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed {
                write!(f, " + ")?;
            }
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*w")?,
                _ => write!(f, "{c}*w^{j}")?,
            }
            printed = true;
        }
        if !printed {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for CyclotomicInt {
    fn zero_like(&self) -> Self {
        CyclotomicInt::zero(self.k).expect("order already validated")
    }
    fn one_like(&self) -> Self {
        CyclotomicInt::one(self.k).expect("order already validated")
    }
    fn from_i64_like(&self, v: i64) -> Self {
        CyclotomicInt::from_int(self.k, v).expect("order already validated")
    }
    fn is_zero(&self) -> bool {
        CyclotomicInt::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other).expect("mixed cyclotomic orders")
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other).expect("mixed cyclotomic orders")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: u32, j: u32) -> CyclotomicInt {
        CyclotomicInt::omega_pow(k, j).unwrap()
    }

    #[test]
    fn prime_check() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(9));
        assert!(CyclotomicInt::zero(4).is_err());
    }

    #[test]
    fn omega_squared_reduces() {
        // k=3: w*w = -1 - w
        let p = w(3, 1).mul(&w(3, 1)).unwrap();
        assert_eq!(
            p.coeffs(),
            &[BigInt::from(-1), BigInt::from(-1)]
        );
    }

    #[test]
    fn one_plus_omega_squared() {
        // k=3: (1+w)^2 = 1 + 2w + w^2 = w
        let a = w(3, 0).add(&w(3, 1)).unwrap();
        assert_eq!(a.mul(&a).unwrap(), w(3, 1));
    }

    #[test]
    fn geometric_sum_vanishes() {
        for k in [2u32, 3, 5, 7] {
            let mut s = CyclotomicInt::zero(k).unwrap();
            for j in 0..k {
                s = s.add(&w(k, j)).unwrap();
            }
            assert!(s.is_zero(), "sum of all k-th roots must vanish for k={k}");
        }
    }

    #[test]
    fn omega_to_the_k_is_one() {
        for k in [2u32, 3, 5, 7] {
            let mut p = CyclotomicInt::one(k).unwrap();
            for _ in 0..k {
                p = p.mul(&w(k, 1)).unwrap();
            }
            assert_eq!(p, CyclotomicInt::one(k).unwrap());
        }
    }

    #[test]
    fn mul_commutes_and_associates() {
        // deterministic pseudo-random triples over k=5
        let mk = |seed: i64| {
            let mut z = CyclotomicInt::zero(5).unwrap();
            for (j, c) in z.coeffs.iter_mut().enumerate() {
                *c = BigInt::from((seed * (j as i64 + 3)) % 7 - 3);
            }
            z
        };
        for s in 0..20i64 {
            let (a, b, c) = (mk(s), mk(s + 11), mk(s + 29));
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn mixed_order_rejected() {
        assert!(w(3, 1).add(&w(5, 1)).is_err());
    }
}
