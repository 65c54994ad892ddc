pub mod error;
pub mod factory;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod irreducible;
pub mod linalg;
pub mod local;
pub mod monomial;
pub mod order;
pub mod par;
pub mod poly;
pub mod seshadri;
pub mod settings;
pub mod univariate;

pub use error::{Error, Result};
