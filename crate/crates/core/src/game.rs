use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::regular;

/// A simple game given by its minimal winning coalitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGame {
    kernel: Hypergraph,
}

/// The two competing input-size measures of a game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameStats {
    /// `|A| * |mu(W)|`.
    pub simple_measure: usize,
    /// `|A| * |mu'(W)|`, present when the game is regular in the given order.
    pub regular_measure: Option<usize>,
}

impl SimpleGame {
    /// Wraps a kernel; rejects families that are not antichains.
    pub fn new(kernel: Hypergraph) -> Result<Self> {
        kernel.require_antichain()?;
        Ok(Self { kernel })
    }

    /// Normalizes an arbitrary family to its minimal edges first.
    pub fn from_generators(h: &Hypergraph) -> Self {
        Self {
            kernel: h.minimize(),
        }
    }

    pub fn kernel(&self) -> &Hypergraph {
        &self.kernel
    }

    pub fn n(&self) -> usize {
        self.kernel.n()
    }

    pub fn into_kernel(self) -> Hypergraph {
        self.kernel
    }

    pub fn is_winning(&self, z: crate::Coalition) -> bool {
        self.kernel.responds(z)
    }

    pub fn stats(&self) -> GameStats {
        let regular_measure = regular::shift_minimize(&self.kernel)
            .ok()
            .map(|hp| hp.size());
        let stats = GameStats {
            simple_measure: self.kernel.size(),
            regular_measure,
        };
        debug_assert!(stats.regular_measure.is_none_or(|r| r <= stats.simple_measure));
        stats
    }
}
