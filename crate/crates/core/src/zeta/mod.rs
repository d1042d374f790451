//! The Riemann `Ξ` function and the `Ξ(z | χ, a)` of real primitive Dirichlet
//! characters, through their kernels `φ`, cosine transforms and moments.

mod character;
mod kernel;
mod moments;
mod quadrature;

pub use character::{
    fundamental_discriminants, is_fundamental_discriminant, kronecker_character, kronecker_symbol,
    DirichletCharacter,
};
pub use kernel::{
    phi_chi, phi_chi_direct, phi_riemann, phi_riemann_direct, theta_selfcheck, Kernel,
};
pub use moments::{
    dirichlet_moments, kernel_moments, moment_s_closed, riemann_moments, taylor_xi, MomentTable,
    MAX_MOMENT_ORDER,
};
pub use quadrature::{xi_cosine, xi_cosine_kernel, GaussLegendre, QuadratureConfig, XiEvaluator};
