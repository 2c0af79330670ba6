pub mod certificate;
pub mod compactify;
pub mod connectify;
pub mod error;
pub mod exact;
pub mod finite;
pub mod gen;
pub mod report;
pub mod space;
pub mod suite;

pub use error::{Error, Result};
