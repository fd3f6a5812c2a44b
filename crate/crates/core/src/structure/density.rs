use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

/// An exact proportion `|subset| / |ring|` in `[0, 1]`, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Density(Ratio<u64>);

impl Density {
    /// Panics if `den == 0` or `num > den`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0 && num <= den, "density {num}/{den} outside [0, 1]");
        Density(Ratio::new(num, den))
    }

    /// `(q^2 - q + 1) / q^2`.
    pub fn noncommutative_bound(q: u64) -> Self {
        Density::new(q * q - q + 1, q * q)
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    /// Decimal rendering, for display only.
    pub fn approx(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
