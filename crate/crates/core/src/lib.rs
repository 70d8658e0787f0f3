//! Generalised Sidon sets built from ordered theta graphs.
//!
//! The crate turns girth-constrained ordered graphs into sets of integers by
//! labelling vertex `i` with `m^(i+1)` (`m = 2k + 1`) and taking every edge's
//! difference. On the resulting finite sets it provides:
//!
//! * exact additive representation counts and `B_{k,l}` classification ([`repset`]),
//! * ordered theta graphs, induced cycles and theta copies ([`ordgraph`]),
//! * the power-of-`m` encoding and the sum-coincidence analysis ([`encoder`]),
//! * extraction of large `B_k`-subsets ([`extract`]),
//! * exhaustive decision of colouring arrow relations ([`ramsey`]),
//! * forests of copies ([`forest`]),
//! * brute-force reference implementations ([`oracle`]) and an end-to-end
//!   [`pipeline`].
//!
//! Every verifier reports through a JSON-serialisable [`Certificate`].

pub mod cert;
pub mod config;
pub mod encoder;
mod error;
pub mod extract;
pub mod forest;
pub mod nat;
pub mod oracle;
pub mod ordgraph;
pub mod pipeline;
pub mod ramsey;
pub mod repset;

pub use cert::{Certificate, Check};
pub use config::Config;
pub use error::{Error, Result};
pub use nat::Nat;
pub use ordgraph::OrderedGraph;
pub use repset::FiniteSet;
