//! Named groups and the small spec language used to describe them.
//!
//! Grammar (whitespace is ignored, names are case-insensitive):
//!
//! ```text
//! spec := "sym(" n ")" | "alt(" n ")" | "cyc(" n ")" | "dih2(" n ")"
//!       | "direct(" spec "," spec ")" | "wreath(" spec "," spec ")"
//! ```
//!
//! Long forms `symmetric`, `alternating`, `cyclic`, `dihedral_2pow`,
//! `direct_product` and the short form `wr` are accepted too.
//!
//! A group given on the command line may also be a `;`-separated list of
//! generators in cycle notation, see [`GroupSpec`].

use alloc::{
    boxed::Box,
    format,
    string::{String, ToString},
    vec,
    vec::Vec,
};
use core::{fmt, str::FromStr};

use crate::{commutator::comm, error::ParseError, group::Group, perm::Permutation, Result};

const MAX_DIHEDRAL_EXPONENT: u32 = 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    /// Dihedral group of order `2^(n+1)` on `2^n` points.
    Dihedral2Pow(u32),
    DirectProduct(Box<ConstructionSpec>, Box<ConstructionSpec>),
    /// `A wr B` in the imprimitive action on `deg(A) · deg(B)` points.
    Wreath(Box<ConstructionSpec>, Box<ConstructionSpec>),
}

impl ConstructionSpec {
    pub fn wreath(a: Self, b: Self) -> Self {
        Self::Wreath(Box::new(a), Box::new(b))
    }

    pub fn direct(a: Self, b: Self) -> Self {
        Self::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Number of points the construction acts on.
    pub fn degree(&self) -> usize {
        match self {
            Self::Symmetric(n) | Self::Alternating(n) | Self::Cyclic(n) => *n,
            Self::Dihedral2Pow(n) => 1 << n,
            Self::DirectProduct(a, b) => a.degree() + b.degree(),
            Self::Wreath(a, b) => a.degree() * b.degree(),
        }
    }

    /// Canonical generators, all of degree [`ConstructionSpec::degree`].
    pub fn generators(&self) -> Vec<Permutation> {
        let degree = self.degree();
        let cycle = |points: core::ops::RangeInclusive<usize>| {
            let pts: Vec<usize> = points.collect();
            Permutation::from_cycles(degree, &[&pts]).expect("valid cycle")
        };
        match self {
            Self::Symmetric(n) => match n {
                0 | 1 => vec![Permutation::identity(degree)],
                2 => vec![cycle(1..=2)],
                _ => vec![cycle(1..=2), cycle(1..=*n)],
            },
            Self::Alternating(n) => match n {
                0..=2 => vec![Permutation::identity(degree)],
                3 => vec![cycle(1..=3)],
                _ if n % 2 == 1 => vec![cycle(1..=3), cycle(1..=*n)],
                _ => vec![cycle(1..=3), cycle(2..=*n)],
            },
            Self::Cyclic(n) => match n {
                0 | 1 => vec![Permutation::identity(degree)],
                _ => vec![cycle(1..=*n)],
            },
            Self::Dihedral2Pow(n) => {
                let (x, y) = dihedral_reflections(*n);
                vec![x, y]
            }
            Self::DirectProduct(a, b) => {
                let shift = a.degree();
                let mut gens = a.generators().iter().map(|g| g.embed(degree)).collect::<Vec<_>>();
                gens.extend(b.generators().iter().map(|g| shifted(g, shift, degree)));
                gens
            }
            Self::Wreath(a, b) => {
                let (d, m) = (a.degree(), b.degree());
                let mut gens = Vec::new();
                for block in 0..m {
                    for g in a.generators().iter().filter(|g| !g.is_identity()) {
                        gens.push(shifted(g, block * d, degree));
                    }
                }
                for h in b.generators().iter().filter(|h| !h.is_identity()) {
                    let images = (0..degree).map(|pt| (h.image(pt / d) * d + pt % d) as u32).collect();
                    gens.push(Permutation::from_images(images).expect("block permutation"));
                }
                if gens.is_empty() {
                    gens.push(Permutation::identity(degree));
                }
                gens
            }
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.validate()?;
        Group::with_degree(self.degree(), self.generators())
    }

    pub(crate) fn validate(&self) -> core::result::Result<(), ParseError> {
        let bad = |name: &str, message: &str| ParseError::BadParameter { name: name.into(), message: message.into() };
        match self {
            Self::Symmetric(0) => Err(bad("sym", "degree must be positive")),
            Self::Alternating(0) => Err(bad("alt", "degree must be positive")),
            Self::Cyclic(0) => Err(bad("cyc", "order must be positive")),
            Self::Dihedral2Pow(n) if *n < 2 || *n > MAX_DIHEDRAL_EXPONENT => {
                Err(bad("dih2", "exponent must lie in 2..=15"))
            }
            Self::DirectProduct(a, b) | Self::Wreath(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }
}

fn shifted(g: &Permutation, shift: usize, degree: usize) -> Permutation {
    let images = (0..degree)
        .map(|pt| if pt >= shift && pt < shift + g.degree() { (g.image(pt - shift) + shift) as u32 } else { pt as u32 })
        .collect();
    Permutation::from_images(images).expect("shifted permutation")
}

/// The reflections `x: i ↦ -i` and `y: i ↦ 1 - i` on `Z/2^n`, whose product
/// `xy` is the rotation `i ↦ i + 1` of order `2^n`.
pub fn dihedral_reflections(n: u32) -> (Permutation, Permutation) {
    let size = 1usize << n;
    let x = (0..size).map(|i| ((size - i) % size) as u32).collect();
    let y = (0..size).map(|i| ((size + 1 - i) % size) as u32).collect();
    (Permutation::from_images(x).expect("reflection"), Permutation::from_images(y).expect("reflection"))
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Symmetric(n) => write!(f, "sym({n})"),
            Self::Alternating(n) => write!(f, "alt({n})"),
            Self::Cyclic(n) => write!(f, "cyc({n})"),
            Self::Dihedral2Pow(n) => write!(f, "dih2({n})"),
            Self::DirectProduct(a, b) => write!(f, "direct({a},{b})"),
            Self::Wreath(a, b) => write!(f, "wreath({a},{b})"),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let mut parser = SpecParser { text: &compact, pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != compact.len() {
            return Err(parser.error("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Malformed { position: self.pos, message: message.into() }
    }

    fn expect(&mut self, ch: u8) -> core::result::Result<(), ParseError> {
        if self.text.as_bytes().get(self.pos) == Some(&ch) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", ch as char)))
        }
    }

    fn word(&mut self, pred: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.text.as_bytes().get(self.pos).is_some_and(|&b| pred(b)) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> core::result::Result<usize, ParseError> {
        let digits = self.word(|b| b.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        digits.parse().map_err(|_| self.error("number out of range"))
    }

    fn spec(&mut self) -> core::result::Result<ConstructionSpec, ParseError> {
        let name = self.word(|b| b.is_ascii_alphanumeric() || b == b'_').to_string();
        self.expect(b'(')?;
        let spec = match name.as_str() {
            "sym" | "symmetric" | "s" => ConstructionSpec::Symmetric(self.number()?),
            "alt" | "alternating" | "a" => ConstructionSpec::Alternating(self.number()?),
            "cyc" | "cyclic" | "z" | "c" => ConstructionSpec::Cyclic(self.number()?),
            "dih2" | "dihedral_2pow" => {
                let n = self.number()?;
                ConstructionSpec::Dihedral2Pow(u32::try_from(n).unwrap_or(u32::MAX))
            }
            "direct" | "direct_product" | "dp" | "wreath" | "wr" => {
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                if name.starts_with('w') {
                    ConstructionSpec::wreath(a, b)
                } else {
                    ConstructionSpec::direct(a, b)
                }
            }
            _ => return Err(ParseError::UnknownConstruction(name)),
        };
        self.expect(b')')?;
        Ok(spec)
    }
}

/// A group as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(ConstructionSpec),
    /// Generators in cycle notation separated by `;`.
    Generators(Vec<Permutation>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        match self {
            Self::Named(spec) => spec.build(),
            Self::Generators(gens) => Group::from_generators(gens.iter().cloned()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        if s.trim_start().starts_with('(') {
            let gens = s
                .split(';')
                .filter(|part| !part.trim().is_empty())
                .map(str::parse)
                .collect::<core::result::Result<Vec<Permutation>, _>>()?;
            if gens.is_empty() {
                return Err(ParseError::Malformed { position: 0, message: "no generators".into() });
            }
            Ok(Self::Generators(gens))
        } else {
            s.parse().map(Self::Named)
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Named(spec) => spec.fmt(f),
            Self::Generators(gens) => {
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    g.fmt(f)?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ConstructionSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One row of the dihedral commutator table.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DihedralRow {
    pub k: usize,
    /// `[x, _k y]`.
    pub x_k: Permutation,
    /// `[y, _k x]`.
    pub y_k: Permutation,
    /// `[x, _k y] = z^{-(-2)^k}`.
    pub x_k_matches_power: bool,
    /// `[y, _k x] = z^{(-2)^k}`.
    pub y_k_matches_power: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DihedralTable {
    pub n: u32,
    pub x: Permutation,
    pub y: Permutation,
    /// `z = xy`.
    pub z: Permutation,
    pub commutator_is_z_squared: bool,
    /// `z^x = z^y = z⁻¹`.
    pub reflections_invert_z: bool,
    pub rows: Vec<DihedralRow>,
}

impl DihedralTable {
    pub fn all_verified(&self) -> bool {
        self.commutator_is_z_squared
            && self.reflections_invert_z
            && self.rows.iter().all(|r| r.x_k_matches_power && r.y_k_matches_power)
    }
}

/// `[x, _k y]` and `[y, _k x]` for `k = 1..=n`, checked against the powers
/// `z^{∓(-2)^k}` of the rotation `z = xy`.
pub fn dihedral_engel_table(n: u32) -> Result<DihedralTable> {
    ConstructionSpec::Dihedral2Pow(n).validate()?;
    let (x, y) = dihedral_reflections(n);
    let z = x.compose(&y);
    let modulus = 1i64 << n;
    let z_inv = z.inverse();
    let mut rows = Vec::new();
    let (mut x_k, mut y_k) = (x.clone(), y.clone());
    let mut signed_power = 1i64; // (-2)^k mod 2^n
    for k in 1..=n as usize {
        x_k = comm(&x_k, &y);
        y_k = comm(&y_k, &x);
        signed_power = (signed_power * -2).rem_euclid(modulus);
        rows.push(DihedralRow {
            k,
            x_k_matches_power: x_k == z.pow(-signed_power),
            y_k_matches_power: y_k == z.pow(signed_power),
            x_k: x_k.clone(),
            y_k: y_k.clone(),
        });
    }
    Ok(DihedralTable {
        n,
        commutator_is_z_squared: comm(&x, &y) == z.pow(2),
        reflections_invert_z: z.conjugate(&x) == z_inv && z.conjugate(&y) == z_inv,
        x,
        y,
        z,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series;

    fn spec(s: &str) -> ConstructionSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(
            spec("wreath(sym(3),cyc(4))"),
            ConstructionSpec::wreath(ConstructionSpec::Symmetric(3), ConstructionSpec::Cyclic(4))
        );
        assert_eq!(spec(" Wreath ( S(3) , Z(4) ) ").to_string(), "wreath(sym(3),cyc(4))");
        assert_eq!(spec("dihedral_2pow(5)"), ConstructionSpec::Dihedral2Pow(5));
        assert_eq!(spec("direct(cyc(2),alt(4))").to_string(), "direct(cyc(2),alt(4))");
        assert!(matches!("foo(3)".parse::<ConstructionSpec>(), Err(ParseError::UnknownConstruction(_))));
        assert!(matches!("sym(3".parse::<ConstructionSpec>(), Err(ParseError::Malformed { .. })));
        assert!(matches!("sym(3)x".parse::<ConstructionSpec>(), Err(ParseError::Malformed { .. })));
        assert!(matches!("dih2(1)".parse::<ConstructionSpec>(), Err(ParseError::BadParameter { .. })));
        assert!(matches!("sym(0)".parse::<ConstructionSpec>(), Err(ParseError::BadParameter { .. })));
    }

    #[test]
    fn group_specs() {
        let g: GroupSpec = "(1,2,3);(1,2)".parse().unwrap();
        assert_eq!(g.build().unwrap().order(), 6);
        assert_eq!(g.to_string(), "(1,2,3);(1,2)");
        let g: GroupSpec = "sym(4)".parse().unwrap();
        assert_eq!(g.build().unwrap().order(), 24);
        assert!("(1,2;".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn standard_orders() {
        for n in 1..=7usize {
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(ConstructionSpec::Symmetric(n).build().unwrap().order(), fact);
            assert_eq!(ConstructionSpec::Alternating(n).build().unwrap().order(), if n < 2 { 1 } else { fact / 2 });
            assert_eq!(ConstructionSpec::Cyclic(n).build().unwrap().order(), n as u128);
        }
        assert_eq!(spec("direct(sym(3),cyc(4))").build().unwrap().order(), 24);
    }

    #[test]
    fn dihedral_orders() {
        for n in 2..=10 {
            let g = ConstructionSpec::Dihedral2Pow(n).build().unwrap();
            assert_eq!(g.order(), 1u128 << (n + 1));
            assert_eq!(g.degree(), 1 << n);
            let (x, y) = dihedral_reflections(n);
            assert_eq!(x.order(), 2);
            assert_eq!(y.order(), 2);
            assert_eq!(x.compose(&y).order(), 1u128 << n);
        }
    }

    #[test]
    fn wreath_orders() {
        let w = spec("wreath(sym(3),cyc(4))").build().unwrap();
        assert_eq!(w.degree(), 12);
        assert_eq!(w.order(), 5184);
        let q = spec("wreath(cyc(2),cyc(4))").build().unwrap();
        assert_eq!(q.order(), 64);
        assert_eq!(series::nilpotency_class(&q), Some(4));
        assert_eq!(spec("wreath(cyc(3),cyc(3))").build().unwrap().order(), 81);
        assert_eq!(spec("wreath(sym(2),sym(3))").build().unwrap().order(), 48);
    }

    #[test]
    fn dihedral_table() {
        for n in 2..=10 {
            let t = dihedral_engel_table(n).unwrap();
            assert!(t.all_verified(), "n = {n}");
            let last = t.rows.last().unwrap();
            assert!(last.x_k.is_identity() && last.y_k.is_identity());
            let before = &t.rows[t.rows.len() - 2];
            assert!(!before.x_k.is_identity() && !before.y_k.is_identity());
        }
        assert!(dihedral_engel_table(1).is_err());
    }
}
