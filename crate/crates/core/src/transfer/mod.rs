//! Bar states and the bar state matrices that encode one row of a mosaic.

pub mod bars;
mod matrix;
mod state;

pub use bars::{bar_a, bar_b, bar_pair, central_c, lower_l, restricted_a, upper_u};
pub use matrix::StateMatrix;
pub use state::{state_index, state_word, BarState, Letter, MAX_STATE_LEN};
