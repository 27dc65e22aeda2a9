//! Exact rational arithmetic for probability and bound checks.
//!
//! All inequalities the crate verifies are decided in integer arithmetic;
//! no floating point is used anywhere.

use core::cmp::Ordering;
use core::fmt;

use alloc::vec::Vec;

/// A reduced fraction over `i128` with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        if g == 0 {
            return Rational { num: 0, den: 1 };
        }
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(v: i128) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn add(self, other: Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn sub(self, other: Rational) -> Rational {
        Rational::new(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )
    }

    pub fn mul(self, other: Rational) -> Rational {
        Rational::new(self.num * other.num, self.den * other.den)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd_i128(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Unsigned integer of arbitrary width; just enough arithmetic to compare
/// tower-of-exponent bounds exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigNat {
    limbs: Vec<u64>, // little-endian, no trailing zeros
}

impl BigNat {
    pub fn from_u128(v: u128) -> Self {
        let mut limbs = alloc::vec![v as u64, (v >> 64) as u64];
        while limbs.last() == Some(&0) {
            limbs.pop();
        }
        BigNat { limbs }
    }

    pub fn mul_u64(&mut self, m: u64) {
        let mut carry = 0u128;
        for limb in self.limbs.iter_mut() {
            let prod = *limb as u128 * m as u128 + carry;
            *limb = prod as u64;
            carry = prod >> 64;
        }
        while carry != 0 {
            self.limbs.push(carry as u64);
            carry >>= 64;
        }
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn shl64s(&mut self, bits: u64) {
        let words = (bits / 64) as usize;
        let rem = bits % 64;
        if !self.limbs.is_empty() {
            if rem != 0 {
                let mut carry = 0u64;
                for limb in self.limbs.iter_mut() {
                    let new_carry = *limb >> (64 - rem);
                    *limb = (*limb << rem) | carry;
                    carry = new_carry;
                }
                if carry != 0 {
                    self.limbs.push(carry);
                }
            }
            let mut shifted = alloc::vec![0u64; words];
            shifted.extend_from_slice(&self.limbs);
            self.limbs = shifted;
        }
    }
}

impl PartialOrd for BigNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigNat {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.limbs.len() != other.limbs.len() {
            return self.limbs.len().cmp(&other.limbs.len());
        }
        for (a, b) in self.limbs.iter().rev().zip(other.limbs.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Decides `order <= (3k/2)^(3k/4)` exactly, by comparing
/// `order^4 * 2^(3k)` against `(3k)^(3k)`.
pub fn order_bounded_by_independence(order: u64, k: usize) -> bool {
    if k == 0 {
        return order <= 1;
    }
    let e = 3 * k as u64;
    let mut lhs = BigNat::from_u128((order as u128).pow(4));
    lhs.shl64s(e);
    let mut rhs = BigNat::from_u128(1);
    for _ in 0..e {
        rhs.mul_u64(e);
    }
    lhs <= rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reduction_and_ordering() {
        let a = Rational::new(2280, 3600);
        assert_eq!(a, Rational::new(19, 30));
        assert_eq!(a.to_string(), "19/30");
        let b = Rational::from_int(1).sub(a);
        assert_eq!(b, Rational::new(11, 30));
        assert!(Rational::new(237, 3600) < b);
        assert!(b < Rational::new(3246, 3600));
        assert_eq!(Rational::new(-6, -4), Rational::new(3, 2));
        assert_eq!(Rational::new(6, -4), Rational::new(-3, 2));
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(a.add(b), Rational::new(1, 2));
        assert_eq!(a.mul(b), Rational::new(1, 18));
        assert_eq!(a.sub(b), b);
    }

    #[test]
    fn bignat_comparison() {
        let mut a = BigNat::from_u128(u128::MAX);
        a.mul_u64(1000);
        let mut b = BigNat::from_u128(u128::MAX);
        b.mul_u64(999);
        assert!(b < a);
        let mut c = BigNat::from_u128(1);
        c.shl64s(200);
        let mut d = BigNat::from_u128(1);
        d.shl64s(199);
        assert!(d < c);
    }

    #[test]
    fn independence_order_bound() {
        // 60 <= (33/2)^(33/4) holds comfortably.
        assert!(order_bounded_by_independence(60, 11));
        // 2^4 * 2^3 = 128 > 27 = 3^3, so the k = 1 bound fails for order 2.
        assert!(!order_bounded_by_independence(2, 1));
        assert!(order_bounded_by_independence(1, 0));
        assert!(!order_bounded_by_independence(2, 0));
    }
}
