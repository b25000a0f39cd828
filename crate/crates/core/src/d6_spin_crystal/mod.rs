//! The concrete D_6^(1) spin-node geometric crystal on `𝒱_1` and `𝒱_2`.

mod closed_forms;
mod points;
mod sigma_bar;
mod zero_node;

pub use closed_forms::{act_e_v1, act_e_v2, epsilon_v1, epsilon_v2, gamma_v1, gamma_v2};
pub use points::{PointV1, PointV2, NODES_V1, NODES_V2, POINT_LEN, WORD_V1, WORD_V2};
pub use sigma_bar::{sigma_bar, sigma_bar_inv};
pub use zero_node::{act_e0_v1, act_e0_via_sigma, k_family, k_monomials, KFamily};
