//! Conjugacy classes and coconjugation sets in split groups of Euclidean
//! isometries `H = T ⋊ H₀`, computed exactly in lattice coordinates.
//!
//! ```
//! use isoconj::{catalog, conjgeo, coconj};
//!
//! let cmm = catalog::group("cmm").unwrap();
//! let h = cmm.parse_element("t[1,0]*s1").unwrap();
//! let h2 = cmm.parse_element("t[0,1]*s1").unwrap();
//!
//! assert_eq!(conjgeo::component_count(&cmm, &h), 2);
//! assert!(coconj::is_conjugate(&cmm, &h, &h2));
//! assert!(!conjgeo::filling_check(&cmm, &cmm.parse_element("s1*s2").unwrap()));
//! ```

pub mod catalog;
pub mod coconj;
pub mod conjgeo;
mod element;
mod error;
pub mod group;
pub mod linalg;
pub mod oracle;
mod spec_file;

pub use error::{Error, Result};
pub use group::{Group, GroupSpec, Isometry, PointGroup};
pub use spec_file::parse_rational;
