//! Built-in group catalog.
//!
//! Groups are shipped as permutation generators: the alternating and
//! symmetric groups act naturally, `SL25` acts on the 24 nonzero vectors
//! of a 2-dimensional space over five elements, `PSL27`/`PGL27` act on the
//! 8-point projective line over seven elements, and `PSL28` on the 9-point
//! projective line over the field with eight elements. `Zn`/`Dn` give
//! cyclic and dihedral groups, and `AxB` (any factors) builds direct
//! products acting on disjoint point sets.

use core::fmt;

use nsgraph_core::group::{GroupError, GroupSpec};
use nsgraph_core::perm::Permutation;

#[derive(Debug)]
pub enum CatalogError {
    UnknownGroup(String),
    Group(GroupError),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownGroup(name) => write!(f, "unknown group name: {name}"),
            CatalogError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<GroupError> for CatalogError {
    fn from(e: GroupError) -> Self {
        CatalogError::Group(e)
    }
}

/// The shipped non-solvable groups, in catalog order.
pub fn scan_names() -> &'static [&'static str] {
    &[
        "A5", "SL25", "Z2xA5", "S5", "PSL27", "PGL27", "A6", "PSL28",
    ]
}

/// Resolves a built-in name, including `x`-separated direct products.
pub fn builtin(name: &str) -> Result<GroupSpec, CatalogError> {
    if let Some((left, right)) = name.split_once('x') {
        let a = builtin(left)?;
        let b = builtin(right)?;
        return Ok(a.direct_product(&b));
    }
    base_group(name)
}

fn base_group(name: &str) -> Result<GroupSpec, CatalogError> {
    let from = |degree: usize, gens: &[&str]| -> Result<GroupSpec, CatalogError> {
        let generators = gens
            .iter()
            .map(|g| Permutation::from_cycles(g, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(GroupError::from)?;
        Ok(GroupSpec::new(name, degree, generators)?)
    };

    match name {
        "1" => Ok(GroupSpec::new("1", 1, vec![Permutation::identity(1)])?),
        "A4" => from(4, &["(1,2,3)", "(2,3,4)"]),
        "A5" => from(5, &["(1,2,3,4,5)", "(3,4,5)"]),
        "A6" => from(6, &["(1,2,3,4,5)", "(4,5,6)"]),
        "S4" => from(4, &["(1,2)", "(1,2,3,4)"]),
        "S5" => from(5, &["(1,2)", "(1,2,3,4,5)"]),
        "SL25" => sl25(),
        "PSL27" => psl27(false),
        "PGL27" => psl27(true),
        "PSL28" => psl28(),
        _ => parametric(name),
    }
}

fn parametric(name: &str) -> Result<GroupSpec, CatalogError> {
    let unknown = || CatalogError::UnknownGroup(name.into());
    let (kind, digits) = name.split_at(1);
    let digits = digits.strip_prefix('_').unwrap_or(digits);
    let n: usize = digits.parse().map_err(|_| unknown())?;
    match kind {
        "Z" if n >= 1 => {
            if n == 1 {
                return Ok(GroupSpec::new(name, 1, vec![Permutation::identity(1)])
                    .map_err(CatalogError::Group)?);
            }
            let cycle: Vec<u16> = (0..n as u16).map(|i| (i + 1) % n as u16).collect();
            let gen = Permutation::from_images(cycle).expect("cycle is a bijection");
            Ok(GroupSpec::new(name, n, vec![gen])?)
        }
        "D" if n >= 3 => {
            let rot: Vec<u16> = (0..n as u16).map(|i| (i + 1) % n as u16).collect();
            let refl: Vec<u16> = (0..n as u16).map(|i| (n as u16 - 1) - i).collect();
            let gens = vec![
                Permutation::from_images(rot).expect("rotation is a bijection"),
                Permutation::from_images(refl).expect("reflection is a bijection"),
            ];
            Ok(GroupSpec::new(name, n, gens)?)
        }
        _ => Err(unknown()),
    }
}

/// Nonzero vectors of the plane over five elements, indexed `5a + b - 1`.
fn sl25() -> Result<GroupSpec, CatalogError> {
    let index = |a: u16, b: u16| -> u16 { a * 5 + b - 1 };
    let apply = |m: [[u16; 2]; 2]| -> Permutation {
        let mut images = vec![0u16; 24];
        for a in 0..5u16 {
            for b in 0..5u16 {
                if a == 0 && b == 0 {
                    continue;
                }
                let na = (m[0][0] * a + m[0][1] * b) % 5;
                let nb = (m[1][0] * a + m[1][1] * b) % 5;
                images[index(a, b) as usize] = index(na, nb);
            }
        }
        Permutation::from_images(images).expect("linear action is a bijection")
    };
    // [[0,-1],[1,0]] and [[1,1],[0,1]] generate the whole matrix group.
    let s = apply([[0, 4], [1, 0]]);
    let t = apply([[1, 1], [0, 1]]);
    Ok(GroupSpec::new("SL25", 24, vec![s, t])?)
}

/// Projective line over seven elements: points 0..=6, infinity at 7.
fn psl27(extended: bool) -> Result<GroupSpec, CatalogError> {
    const INF: u16 = 7;
    let inv7 = |z: u16| -> u16 { (1..7).find(|&w| (z * w) % 7 == 1).unwrap() };
    let translation: Vec<u16> = (0..8)
        .map(|z| if z == INF { INF } else { (z + 1) % 7 })
        .collect();
    let negate_invert: Vec<u16> = (0..8)
        .map(|z| {
            if z == INF {
                0
            } else if z == 0 {
                INF
            } else {
                (7 - inv7(z)) % 7
            }
        })
        .collect();
    let mut gens = vec![
        Permutation::from_images(translation).expect("translation is a bijection"),
        Permutation::from_images(negate_invert).expect("inversion is a bijection"),
    ];
    let name = if extended {
        // multiplication by a non-square extends to the full projective group
        let scale: Vec<u16> = (0..8)
            .map(|z| if z == INF { INF } else { (3 * z) % 7 })
            .collect();
        gens.push(Permutation::from_images(scale).expect("scaling is a bijection"));
        "PGL27"
    } else {
        "PSL27"
    };
    Ok(GroupSpec::new(name, 8, gens)?)
}

/// Projective line over the field with eight elements (polynomials modulo
/// `t^3 + t + 1`, encoded as bit masks): points 0..=7, infinity at 8.
fn psl28() -> Result<GroupSpec, CatalogError> {
    const INF: u16 = 8;
    fn f8_mul(a: u16, b: u16) -> u16 {
        let mut acc = 0u16;
        let mut a = a;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            a <<= 1;
            if a & 0b1000 != 0 {
                a ^= 0b1011; // t^3 = t + 1
            }
            b >>= 1;
        }
        acc
    }
    let f8_inv = |z: u16| -> u16 { (1..8).find(|&w| f8_mul(z, w) == 1).unwrap() };

    let translation: Vec<u16> = (0..9)
        .map(|z| if z == INF { INF } else { z ^ 1 })
        .collect();
    let scale: Vec<u16> = (0..9)
        .map(|z| if z == INF { INF } else { f8_mul(2, z) })
        .collect();
    let invert: Vec<u16> = (0..9)
        .map(|z| {
            if z == INF {
                0
            } else if z == 0 {
                INF
            } else {
                f8_inv(z)
            }
        })
        .collect();
    let gens = vec![
        Permutation::from_images(translation).expect("translation is a bijection"),
        Permutation::from_images(scale).expect("scaling is a bijection"),
        Permutation::from_images(invert).expect("inversion is a bijection"),
    ];
    Ok(GroupSpec::new("PSL28", 9, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nsgraph_core::group::GroupTable;

    fn order_of(name: &str) -> usize {
        GroupTable::enumerate(builtin(name).unwrap(), 20_000)
            .unwrap()
            .order()
    }

    #[test]
    fn alternating_and_symmetric_orders() {
        assert_eq!(order_of("A4"), 12);
        assert_eq!(order_of("A5"), 60);
        assert_eq!(order_of("A6"), 360);
        assert_eq!(order_of("S4"), 24);
        assert_eq!(order_of("S5"), 120);
    }

    #[test]
    fn linear_group_orders() {
        assert_eq!(order_of("SL25"), 120);
        assert_eq!(order_of("PSL27"), 168);
        assert_eq!(order_of("PGL27"), 336);
        // q(q^2 - 1) for q = 8
        assert_eq!(order_of("PSL28"), 504);
    }

    #[test]
    fn parametric_families() {
        assert_eq!(order_of("Z7"), 7);
        assert_eq!(order_of("Z_12"), 12);
        assert_eq!(order_of("D4"), 8);
        assert_eq!(order_of("D6"), 12);
        assert_eq!(order_of("1"), 1);
    }

    #[test]
    fn products() {
        assert_eq!(order_of("Z2xA5"), 120);
        assert_eq!(order_of("A5xZ2"), 120);
        assert_eq!(order_of("A5xZ3"), 180);
        assert_eq!(order_of("Z2xZ2"), 4);
        let spec = builtin("Z2xA5").unwrap();
        assert_eq!(spec.degree, 7);
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            builtin("M11"),
            Err(CatalogError::UnknownGroup(_))
        ));
        assert!(matches!(builtin("Dx"), Err(CatalogError::UnknownGroup(_))));
        assert!(matches!(builtin("D2"), Err(CatalogError::UnknownGroup(_))));
    }
}
