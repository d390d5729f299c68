#![allow(dead_code)]

use rigged_core::{AlgebraData, Family, MultiplicityArray, RcSpace};

/// A named instance of the test battery.
pub struct Instance {
    pub name: &'static str,
    pub family: Family,
    pub rank: usize,
    pub factors: &'static [(usize, usize, usize)],
}

impl Instance {
    pub fn space(&self) -> RcSpace {
        RcSpace::new(
            AlgebraData::new(self.family, self.rank).unwrap(),
            MultiplicityArray::from_triples(self.factors.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }
}

pub const BATTERY: &[Instance] = &[
    Instance { name: "A_1 (B^{1,1})^4", family: Family::A, rank: 1, factors: &[(1, 1, 4)] },
    Instance { name: "A_1 B^{1,2} B^{1,1}", family: Family::A, rank: 1, factors: &[(1, 2, 1), (1, 1, 1)] },
    Instance { name: "A_2 (B^{1,1})^3", family: Family::A, rank: 2, factors: &[(1, 1, 3)] },
    Instance {
        name: "A_2 B^{1,1} B^{1,3} B^{2,2}",
        family: Family::A,
        rank: 2,
        factors: &[(1, 1, 1), (1, 3, 1), (2, 2, 1)],
    },
    Instance { name: "A_2 B^{1,2} B^{2,1}", family: Family::A, rank: 2, factors: &[(1, 2, 1), (2, 1, 1)] },
    Instance { name: "A_3 B^{2,2}", family: Family::A, rank: 3, factors: &[(2, 2, 1)] },
    Instance { name: "A_3 (B^{1,1})^3", family: Family::A, rank: 3, factors: &[(1, 1, 3)] },
    Instance { name: "A_3 (B^{1,1})^6", family: Family::A, rank: 3, factors: &[(1, 1, 6)] },
    Instance { name: "D_4 B^{2,1}", family: Family::D, rank: 4, factors: &[(2, 1, 1)] },
    Instance { name: "D_4 B^{1,1} B^{1,1}", family: Family::D, rank: 4, factors: &[(1, 1, 2)] },
];

/// Single Kirillov-Reshetikhin factors `(rank, r, s)` for promotion checks.
pub const SINGLE_FACTORS: &[(usize, usize, usize)] =
    &[(1, 1, 3), (2, 1, 1), (2, 1, 2), (2, 2, 2), (3, 1, 1), (3, 2, 1), (3, 2, 2), (3, 3, 2), (4, 2, 2)];
