//! Single-variable zeta family: the Hurwitz zeta ζ(s, a), the twisted
//! Hurwitz-Lerch sum Φ(s, a, z), polylogarithms Li_s(z), and Dirichlet
//! L-functions with the finite-Fourier bridges tying the three together.

mod dirichlet;
mod hurwitz;
mod lerch;

pub use dirichlet::{
    all_characters, hurwitz_from_l, hurwitz_from_polylog, l_from_hurwitz, l_from_polylog,
    l_series_direct, polylog_from_l, DirichletCharacter, MAX_MODULUS,
};
pub use hurwitz::{
    hurwitz_zeta, hurwitz_zeta_em, hurwitz_zeta_integral, hurwitz_zeta_series,
};
pub use lerch::{lerch_phi, lerch_phi_integral, lerch_phi_series, polylog, polylog_from_hurwitz};

pub(crate) use hurwitz::hurwitz_any_shift;
pub(crate) use lerch::lerch_phi_any_shift;
// consumed by sibling modules' tests (the lib build itself has no call site)
#[cfg_attr(not(test), allow(unused_imports))]
pub(crate) use lerch::{detect_root_of_unity, root_of_unity};
