//! Bob players of increasing strength, a greedy Alice baseline, and exact
//! solvers for the game value and the static incidence chromatic number.

mod chi;
mod exact;
mod greedy;
mod pressure;
mod random;
mod spoiler;

pub use chi::{static_chi_i, ChiError, ChiResult, DEFAULT_CHI_CAP};
pub use exact::{
    default_k_range, exact_ig, minimax_wins, ExactPlayer, SolveError, SolveLimits, SolveResult, Solver,
};
pub use greedy::GreedyAlice;
pub use pressure::Pressure;
pub use random::RandomBob;
pub use spoiler::{LookaheadBob, SpoilerBob};
