use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// The line `a*x + b*y = c`, stored with `gcd(a, b, c) = 1` and the first
/// nonzero of `(a, b)` positive. Two point pairs span the same line exactly
/// when their canonical triples are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Line {
    pub fn contains(&self, p: Point) -> bool {
        i128::from(self.a) * i128::from(p.x) + i128::from(self.b) * i128::from(p.y)
            == i128::from(self.c)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Canonical line through two distinct points.
pub fn canonical_line(p: Point, q: Point) -> Result<Line> {
    if p == q {
        return Err(Error::InvalidArgument(format!(
            "a line needs two distinct points, got ({}, {}) twice",
            p.x, p.y
        )));
    }
    let (x1, y1, x2, y2) = (
        i128::from(p.x),
        i128::from(p.y),
        i128::from(q.x),
        i128::from(q.y),
    );
    let mut a = y2 - y1;
    let mut b = x1 - x2;
    let mut c = a * x1 + b * y1;
    let g = gcd(gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    let narrow = |v: i128| {
        i64::try_from(v).map_err(|_| {
            Error::Overflow(format!("line through {p:?} and {q:?} does not fit in 64 bits"))
        })
    };
    Ok(Line { a: narrow(a)?, b: narrow(b)?, c: narrow(c)? })
}

/// A finite set of pairwise distinct points in the integer plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if !seen.insert(*p) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate point ({}, {})",
                    p.x, p.y
                )));
            }
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// All distinct lines through at least two of the points, sorted.
    pub fn lines(&self) -> Result<Vec<Line>> {
        let mut lines = BTreeSet::new();
        for (i, &p) in self.points.iter().enumerate() {
            for &q in &self.points[i + 1..] {
                lines.insert(canonical_line(p, q)?);
            }
        }
        Ok(lines.into_iter().collect())
    }
}
