use std::fmt;

use super::{add, cross, narrow};
use crate::error::Result;

/// `[[a11, a12], [a21, a22]]`, acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a11: i64,
    pub a12: i64,
    pub a21: i64,
    pub a22: i64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1, 0, 0, 1);

    pub const fn new(a11: i64, a12: i64, a21: i64, a22: i64) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn det(&self) -> Result<i64> {
        det2(self)
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(1) | Ok(-1))
    }

    pub fn apply(&self, x: i64, y: i64) -> Result<(i64, i64)> {
        let dot = |a: i64, b: i64| narrow(a as i128 * x as i128 + b as i128 * y as i128, "matrix-vector");
        Ok((dot(self.a11, self.a12)?, dot(self.a21, self.a22)?))
    }

    pub fn mul(&self, rhs: &Mat2) -> Result<Mat2> {
        let e = |a: i64, b: i64, c: i64, d: i64| {
            narrow(a as i128 * c as i128 + b as i128 * d as i128, "matrix product")
        };
        Ok(Mat2 {
            a11: e(self.a11, self.a12, rhs.a11, rhs.a21)?,
            a12: e(self.a11, self.a12, rhs.a12, rhs.a22)?,
            a21: e(self.a21, self.a22, rhs.a11, rhs.a21)?,
            a22: e(self.a21, self.a22, rhs.a12, rhs.a22)?,
        })
    }

    pub fn trace(&self) -> Result<i64> {
        add(self.a11, self.a22)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a11, self.a12, self.a21, self.a22)
    }
}

pub fn det2(m: &Mat2) -> Result<i64> {
    cross(m.a11, m.a12, m.a21, m.a22)
}
