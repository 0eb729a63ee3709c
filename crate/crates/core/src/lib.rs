//! Simple games given by their minimal winning coalitions: duality,
//! regularity, weightedness and the reduction to regular games.

pub mod analysis;
pub mod census;
pub mod coalition;
pub mod duality;
pub mod error;
pub mod families;
pub mod game;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod reduction;
pub mod regular;
pub mod weighted;

pub use coalition::{Coalition, MAX_PLAYERS};
pub use error::{Error, Result};
pub use game::{GameStats, SimpleGame};
pub use hypergraph::Hypergraph;
