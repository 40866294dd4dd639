//! Permutations of `{1, …, degree}` and their cycle notation.
//!
//! Points are 1-based in text and 0-based in the `images` slice. A
//! permutation of degree `d` is identified with its extension to any larger
//! degree that fixes the new points, so equality, ordering and hashing all
//! ignore trailing fixed points.

use alloc::{string::String, vec, vec::Vec};
use core::{
    cmp::Ordering,
    fmt,
    hash::{Hash, Hasher},
    ops::Mul,
    str::FromStr,
};

use crate::error::ParseError;

#[derive(Clone)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree.max(1) as u32).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, ParseError> {
        if images.is_empty() {
            return Ok(Self::identity(1));
        }
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let img = img as usize;
            if img >= degree {
                return Err(ParseError::PointExceedsDegree { point: img + 1, degree });
            }
            if core::mem::replace(&mut seen[img], true) {
                return Err(ParseError::RepeatedPoint(img + 1));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, ParseError> {
        let mut images: Vec<u32> = (0..degree.max(1) as u32).collect();
        let mut used = vec![false; images.len()];
        for cycle in cycles {
            for &p in cycle.iter() {
                if p == 0 {
                    return Err(ParseError::ZeroPoint);
                }
                if p > images.len() {
                    return Err(ParseError::PointExceedsDegree { point: p, degree });
                }
                if core::mem::replace(&mut used[p - 1], true) {
                    return Err(ParseError::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`. With `degree = None` the
    /// degree is the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self, ParseError> {
        let cycles = parse_cycle_list(text)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(1);
        let degree = match degree {
            Some(d) => d,
            None => max_point,
        };
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point; points beyond the degree are fixed.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        match self.images.get(point) {
            Some(&img) => img as usize,
            None => point,
        }
    }

    /// Images with trailing fixed points removed.
    fn trimmed(&self) -> &[u32] {
        let mut end = self.images.len();
        while end > 0 && self.images[end - 1] as usize == end - 1 {
            end -= 1;
        }
        &self.images[..end]
    }

    pub fn is_identity(&self) -> bool {
        self.trimmed().is_empty()
    }

    /// Largest moved point (0-based), if any.
    pub fn largest_moved_point(&self) -> Option<usize> {
        self.trimmed().len().checked_sub(1)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &img)| img as usize != i).map(|(i, _)| i)
    }

    /// Extends to `degree` by fixing the new points. Never shrinks.
    pub fn embed(&self, degree: usize) -> Self {
        if degree <= self.images.len() {
            return self.clone();
        }
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Self { images }
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let degree = self.degree().max(other.degree());
        let images = (0..degree).map(|i| other.image(self.image(i)) as u32).collect();
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Self { images }
    }

    /// Conjugate `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Self) -> Self {
        // self^by maps by(i) to by(self(i))
        let degree = self.degree().max(by.degree());
        let mut images = vec![0u32; degree];
        for i in 0..degree {
            images[by.image(i)] = by.image(self.image(i)) as u32;
        }
        Self { images }
    }

    /// Integer power, negative exponents allowed.
    pub fn pow(&self, exponent: i64) -> Self {
        let mut base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length > 1, 0-based, each starting at its least
    /// point and sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Least `k ≥ 1` with `self^k = 1`, the lcm of the cycle lengths.
    ///
    /// Panics if the order does not fit in `u128`, which needs a degree in
    /// the hundreds.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| {
            let len = c.len() as u128;
            let g = gcd(acc, len);
            (acc / g).checked_mul(len).expect("permutation order overflows u128")
        })
    }

    /// Cycle notation with 1-based points; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            out.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                push_usize(&mut out, p + 1);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

fn push_usize(out: &mut String, value: usize) {
    use core::fmt::Write;
    let _ = write!(out, "{value}");
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Splits `(a,b,c)(d,e)` into its cycles. Whitespace is ignored.
fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let malformed = |position: usize, message: &str| ParseError::Malformed { position, message: message.into() };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(malformed(pos, "empty permutation"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected `(`"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == b')' {
            pos += 1;
            skip_ws(&mut pos);
            cycles.push(cycle);
            continue;
        }
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(malformed(pos, "expected a point"));
            }
            let point: usize = text[start..pos].parse().map_err(|_| malformed(start, "point out of range"))?;
            cycle.push(point);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(malformed(pos, "expected `,` or `)`")),
            }
        }
        cycles.push(cycle);
        skip_ws(&mut pos);
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, None)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for Permutation {
    /// Lexicographic on image sequences after embedding both into the
    /// larger degree.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.images.len() == other.images.len() {
            return self.images.cmp(&other.images);
        }
        let degree = self.images.len().max(other.images.len());
        (0..degree).map(|i| self.image(i).cmp(&other.image(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_cycle_string())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = <String as serde::Deserialize>::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Multiset of nontrivial cycle lengths, stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l > 1);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn moved_points(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    /// `(4)(2)(2)` style; the identity type prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        for l in &self.0 {
            write!(f, "({l})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;

    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_composition() {
        let a = p("(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(5).compose(&a), a);
        assert_eq!(p("(1,2)").compose(&p("(1,2)")), Permutation::identity(2));
    }

    #[test]
    fn product_applies_left_factor_first() {
        let x = p("(1,2,3,4)(5,6)(7,8)");
        let y = p("(1,3)(2,5)(4,7,6,8)");
        assert_eq!(x.compose(&y), p("(1,5,8,6,2)(3,7,4)"));
        assert_eq!(&x * &y, p("(1,5,8,6,2)(3,7,4)"));
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(3).inverse().is_identity());
        assert_eq!(p("(1,2,3)").inverse(), p("(1,3,2)"));
        assert_eq!(p("(1,3)(2,5)(4,7,6,8)").inverse(), p("(1,3)(2,5)(4,8,6,7)"));
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p("(1,5,8,6,2)(3,7,4)").order(), 15);
        assert_eq!(p("(1,2,3,4)(5,6)").order(), 4);
    }

    #[test]
    fn parse_and_format() {
        assert!(p("(1)").is_identity());
        assert!(p("()").is_identity());
        assert_eq!(p(" ( 2 , 1 ) (3,5, 4)").to_cycle_string(), "(1,2)(3,5,4)");
        assert_eq!(Permutation::identity(7).to_cycle_string(), "()");
        assert_eq!(p("(1,2,3,4)(5,6)(7,8)").to_cycle_string(), "(1,2,3,4)(5,6)(7,8)");
    }

    #[test]
    fn parse_errors() {
        assert_eq!("(2,1)(1,3)".parse::<Permutation>(), Err(ParseError::RepeatedPoint(1)));
        assert_eq!("(1,1)".parse::<Permutation>(), Err(ParseError::RepeatedPoint(1)));
        assert_eq!("(0,1)".parse::<Permutation>(), Err(ParseError::ZeroPoint));
        assert_eq!(Permutation::parse("(1,9)", Some(8)), Err(ParseError::PointExceedsDegree { point: 9, degree: 8 }));
        for bad in ["", "(1,2", "1,2)", "(1,,2)", "(a)", "(1 2)"] {
            assert!(matches!(bad.parse::<Permutation>(), Err(ParseError::Malformed { .. })), "{bad:?}");
        }
    }

    #[test]
    fn embedding_preserves_value() {
        let a = p("(1,2)");
        let b = a.embed(6);
        assert_eq!(a, b);
        assert_eq!(b.degree(), 6);
        assert_eq!(a.cmp(&b), Ordering::Equal);
        assert!(p("(1,2)") < p("(1,3)"));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(3).cycle_type().lengths(), &[] as &[usize]);
        assert_eq!(p("(1,2,3,4)(5,6)(7,8)").cycle_type().lengths(), &[4, 2, 2]);
        assert_eq!(p("(1,5,8,6,2)(3,7,4)").cycle_type().lengths(), &[5, 3]);
        assert_eq!(p("(1,2,3,4)(5,6)(7,8)").cycle_type().to_string(), "(4)(2)(2)");
    }

    #[test]
    fn conjugation_and_powers() {
        let a = p("(1,2,3)");
        let g = p("(1,4)");
        let expected = g.inverse().compose(&a).compose(&g);
        assert_eq!(a.conjugate(&g), expected);
        assert_eq!(a.pow(3), Permutation::identity(3));
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(0), Permutation::identity(3));
    }
}
