use std::cell::RefCell;
use std::collections::HashMap;

use num_rational::Rational64;

use crate::fracmatch::{fractional_matching_number, HalfInt};
use crate::graph::Graph;
use crate::spectral::{build_matrix, spectral_radius, SpectralParams};

use super::{BoundsError, SPECTRAL_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Graph,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Operator {
    /// `a D + b A`
    Mixed(SpectralParams<f64>),
    /// `D` alone, the `alpha = 1` end of the `A_alpha` family.
    Degree,
}

impl Operator {
    fn key(&self) -> (u64, u64) {
        match self {
            Operator::Mixed(p) => (p.a().to_bits(), p.b().to_bits()),
            Operator::Degree => (u64::MAX, u64::MAX),
        }
    }
}

type RadiusKey = ((u64, u64), Side);

/// Per-graph quantities shared by every check, with memoised spectral radii.
#[derive(Debug)]
pub struct GraphFacts {
    pub graph: Graph,
    pub complement: Graph,
    pub n: usize,
    pub delta: usize,
    pub connected: bool,
    pub mu_f: HalfInt,
    radii: RefCell<HashMap<RadiusKey, f64>>,
}

impl GraphFacts {
    pub fn new(g: &Graph) -> Self {
        GraphFacts {
            graph: g.clone(),
            complement: g.complement(),
            n: g.order(),
            delta: g.min_degree(),
            connected: g.is_connected(),
            mu_f: fractional_matching_number(g),
            radii: RefCell::new(HashMap::new()),
        }
    }

    pub fn fpm(&self) -> bool {
        self.mu_f.twice() == self.n as u64
    }

    /// `2 mu_f > n - k`, decided exactly.
    pub fn exceeds(&self, k: Rational64) -> bool {
        Rational64::from(self.mu_f.twice() as i64) > Rational64::from(self.n as i64) - k
    }

    /// `2 delta > n - k`, decided exactly.
    pub fn degree_routes(&self, k: Rational64) -> bool {
        Rational64::from(2 * self.delta as i64) > Rational64::from(self.n as i64) - k
    }

    pub fn radius(&self, op: Operator, side: Side) -> Result<f64, BoundsError> {
        let key = (op.key(), side);
        if let Some(&r) = self.radii.borrow().get(&key) {
            return Ok(r);
        }
        let g = match side {
            Side::Graph => &self.graph,
            Side::Complement => &self.complement,
        };
        let r = match op {
            Operator::Mixed(p) => spectral_radius(&build_matrix(g, &p), SPECTRAL_TOL)?,
            // diagonal: the radius is the maximum degree
            Operator::Degree => (0..g.order()).map(|v| g.degree(v)).max().unwrap_or(0) as f64,
        };
        self.radii.borrow_mut().insert(key, r);
        Ok(r)
    }
}
