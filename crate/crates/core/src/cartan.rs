//! Cartan data for the simply-laced finite types and weights in the basis of
//! fundamental weights.
//!
//! Node labeling (1-based throughout the crate):
//!
//! * `A_n`: the chain `1 - 2 - ... - n`.
//! * `D_n` (`n >= 4`): the chain `1 - 2 - ... - (n-2)` with the fork nodes `n-1` and
//!   `n` both attached to `n-2`. For `D_4` the trivalent node is `2`.
//! * `E_n` (`n = 6, 7, 8`): Bourbaki labeling, the chain `1 - 3 - 4 - 5 - ... - n`
//!   with node `2` attached to node `4`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::InvalidAlgebra { family: other.to_string(), rank: 0 }),
        }
    }
}

/// A simply-laced Cartan type together with its Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraData {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
}

impl AlgebraData {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !valid {
            return Err(Error::InvalidAlgebra { family: family.to_string(), rank });
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match family {
            Family::A => edges.extend((1..rank).map(|a| (a, a + 1))),
            Family::D => {
                edges.extend((1..rank - 2).map(|a| (a, a + 1)));
                edges.push((rank - 2, rank - 1));
                edges.push((rank - 2, rank));
            }
            Family::E => {
                edges.push((1, 3));
                edges.push((2, 4));
                edges.extend((3..rank).map(|a| (a, a + 1)));
            }
        }
        let mut cartan = vec![vec![0i64; rank]; rank];
        for (a, row) in cartan.iter_mut().enumerate() {
            row[a] = 2;
        }
        for (a, b) in edges {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }
        Ok(AlgebraData { family, rank, cartan })
    }

    pub fn type_a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `A_ab = (alpha_a | alpha_b)` for 1-based nodes.
    pub fn cartan(&self, a: usize, b: usize) -> i64 {
        self.cartan[a - 1][b - 1]
    }

    pub fn check_node(&self, a: usize) -> Result<()> {
        if a == 0 || a > self.rank {
            Err(Error::NodeOutOfRange { node: a, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// Neighbours of `a` in the Dynkin diagram.
    pub fn neighbours(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes().filter(move |&b| b != a && self.cartan(a, b) != 0)
    }

    /// The simple root `alpha_a` in fundamental-weight coordinates (column `a` of the
    /// Cartan matrix).
    pub fn simple_root(&self, a: usize) -> Weight {
        Weight((1..=self.rank).map(|b| self.cartan(b, a)).collect())
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.rank])
    }

    /// Solves `cartan * x = rhs` exactly. The Cartan matrix of a finite type is
    /// nonsingular, so the solution always exists over the rationals.
    pub fn solve(&self, rhs: &[i64]) -> Vec<Ratio<i64>> {
        let n = self.rank;
        assert_eq!(rhs.len(), n, "right-hand side has the wrong length");
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> =
                    self.cartan[i].iter().map(|&x| Ratio::from_integer(x)).collect();
                row.push(Ratio::from_integer(rhs[i]));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| m[r][col] != Ratio::from_integer(0))
                .expect("Cartan matrix of finite type is nonsingular");
            m.swap(col, pivot);
            let inv = Ratio::from_integer(1) / m[col][col];
            for x in m[col].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != col && m[r][col] != Ratio::from_integer(0) {
                    let factor = m[r][col];
                    for c in col..=n {
                        let delta = factor * m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n]).collect()
    }
}

impl fmt::Display for AlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

/// Serialized form of an algebra: `{"family": "A", "rank": 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub family: Family,
    pub rank: usize,
}

impl TryFrom<AlgebraSpec> for AlgebraData {
    type Error = Error;

    fn try_from(spec: AlgebraSpec) -> Result<Self> {
        AlgebraData::new(spec.family, spec.rank)
    }
}

impl From<&AlgebraData> for AlgebraSpec {
    fn from(alg: &AlgebraData) -> Self {
        AlgebraSpec { family: alg.family(), rank: alg.rank() }
    }
}

/// A weight `sum_a mu_a Lambda_a`, stored by its coordinates `mu_a = <h_a, weight>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `<h_a, weight>` for a 1-based node `a`.
    pub fn pairing(&self, a: usize) -> i64 {
        self.0[a - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn zip_with(&self, other: &Weight, op: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(self.0.len(), other.0.len(), "weights of different rank");
        Weight(self.0.iter().zip(&other.0).map(|(&x, &y)| op(x, y)).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |x, y| x - y)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
