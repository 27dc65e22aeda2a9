//! Permutations of `{0..n-1}` in image form, with disjoint-cycle parsing.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A bijection on `{0..n-1}`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u16>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PermError {
    /// Cycle text that does not match the grammar.
    Malformed(String),
    /// A point named twice in the same permutation.
    RepeatedPoint(usize),
    /// A point outside `1..=degree` (points are 1-based in cycle notation).
    PointOutOfRange { point: usize, degree: usize },
    /// Operands of different degree.
    DegreeMismatch { left: usize, right: usize },
    /// Image vector that is not a bijection.
    NotBijective,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::Malformed(s) => write!(f, "malformed cycle notation: {s}"),
            PermError::RepeatedPoint(p) => write!(f, "point {p} appears more than once"),
            PermError::PointOutOfRange { point, degree } => {
                write!(f, "point {point} out of range for degree {degree}")
            }
            PermError::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            PermError::NotBijective => write!(f, "image list is not a bijection"),
        }
    }
}

impl core::error::Error for PermError {}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(PermError::NotBijective);
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based disjoint-cycle notation, e.g. `"(1,2)(3,4)"`.
    ///
    /// `"()"` denotes the identity. Whitespace between tokens is ignored;
    /// points not named are fixed.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut used = alloc::vec![false; degree];
        let mut chars = text.chars().peekable();
        let mut any = false;

        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => {
                    return Err(PermError::Malformed(format!(
                        "expected '(' but found {c:?}"
                    )))
                }
            }
            any = true;

            let mut cycle: Vec<usize> = Vec::new();
            loop {
                while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                    chars.next();
                }
                match chars.peek() {
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let mut value = 0usize;
                        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                            value = value * 10 + (chars.next().unwrap() as usize - '0' as usize);
                            if value > degree {
                                return Err(PermError::PointOutOfRange {
                                    point: value,
                                    degree,
                                });
                            }
                        }
                        if value == 0 {
                            return Err(PermError::PointOutOfRange { point: 0, degree });
                        }
                        cycle.push(value - 1);
                        while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                            chars.next();
                        }
                        match chars.peek() {
                            Some(',') => {
                                chars.next();
                            }
                            Some(')') => {}
                            other => {
                                return Err(PermError::Malformed(format!(
                                    "expected ',' or ')' but found {other:?}"
                                )))
                            }
                        }
                    }
                    other => {
                        return Err(PermError::Malformed(format!(
                            "expected point or ')' but found {other:?}"
                        )))
                    }
                }
            }

            for &p in &cycle {
                if used[p] {
                    return Err(PermError::RepeatedPoint(p + 1));
                }
                used[p] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u16;
            }
        }

        if !any {
            return Err(PermError::Malformed("empty input".into()));
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u16 == j)
    }

    /// Composition applying `self` first, then `other`.
    ///
    /// This left-to-right convention is fixed across the whole crate:
    /// `a.compose(&b)` is the group product `ab`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: self
                .images
                .iter()
                .map(|&m| other.images[m as usize])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Least `k >= 1` with the k-th power equal to the identity
    /// (the lcm of the cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = alloc::vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Canonical disjoint-cycle rendering: 1-based points, each cycle led by
    /// its smallest point, cycles ordered by leading point; identity is `"()"`.
    pub fn to_cycle_string(&self) -> String {
        let mut out = String::new();
        let mut seen = alloc::vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&format!("{}", p + 1));
                first = false;
                p = self.images[p] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_basic_cycles() {
        let p = Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap();
        assert_eq!(p.images, vec![1, 2, 3, 4, 0]);
        let id = Permutation::from_cycles("()", 5).unwrap();
        assert!(id.is_identity());
        let q = Permutation::from_cycles("(1,2)(3,4)", 5).unwrap();
        assert_eq!(q.images, vec![1, 0, 3, 2, 4]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::from_cycles("(1,2", 5),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::from_cycles("(1,2)(2,3)", 5),
            Err(PermError::RepeatedPoint(2))
        ));
        assert!(matches!(
            Permutation::from_cycles("(1,6)", 5),
            Err(PermError::PointOutOfRange { point: 6, .. })
        ));
        assert!(matches!(
            Permutation::from_cycles("", 5),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            Permutation::from_cycles("(0,1)", 5),
            Err(PermError::PointOutOfRange { point: 0, .. })
        ));
    }

    #[test]
    fn compose_applies_left_first() {
        let a = Permutation::from_cycles("(1,2,3)", 3).unwrap();
        let sq = a.compose(&a).unwrap();
        assert_eq!(sq, Permutation::from_cycles("(1,3,2)", 3).unwrap());
        let t = Permutation::from_cycles("(1,2)", 3).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());
        let id = Permutation::identity(3);
        assert_eq!(a.compose(&id).unwrap(), a);
    }

    #[test]
    fn inverse_and_order() {
        let p = Permutation::from_cycles("(1,2,3,4,5)", 5).unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.order(), 5);
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(
            Permutation::from_cycles("(1,2)(3,4)", 5).unwrap().order(),
            2
        );
        assert_eq!(
            Permutation::from_cycles("(1,2)(3,4,5)", 5).unwrap().order(),
            6
        );
    }

    #[test]
    fn cycle_string_round_trips() {
        for text in ["(1,2,3,4,5)", "(1,2)(3,4)", "()", "(2,5)(3,4)"] {
            let p = Permutation::from_cycles(text, 5).unwrap();
            let rendered = p.to_cycle_string();
            let back = Permutation::from_cycles(&rendered, 5).unwrap();
            assert_eq!(p, back);
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(PermError::DegreeMismatch { .. })
        ));
    }
}
