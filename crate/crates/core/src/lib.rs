//! Untwistedness of Grossberg–Karshon twisted cubes for words in simply-laced
//! root systems.
//!
//! Two independent deciders are provided:
//!
//! * [`cartier::is_untwisted`] scans the Cartier data `m_sigma` over all sign
//!   vectors;
//! * [`walks::find_hesitant_jumping_ell_subword`] searches the word for a
//!   hesitant jumping `ell`-walk.
//!
//! For words in types A, D and E the two are expected to agree; [`verify`]
//! runs them against each other. [`twistcube`] enumerates the signed lattice
//! points of a cube, and [`cli`] is the command-line front end.
//!
//! ```
//! use twisted_cubes::{cartier, twistcube::TwistParams, walks, DynkinDiagram};
//!
//! let a2: DynkinDiagram = "A2".parse().unwrap();
//! let p = TwistParams::from_word_and_ell(&a2, &[1, 2, 1], &[2, 1, 2]).unwrap();
//! assert!(!cartier::is_untwisted(&p).unwrap().untwisted);
//!
//! let hit = walks::find_hesitant_jumping_ell_subword(&a2, &[1, 2, 1], &[2, 1, 2]).unwrap();
//! assert_eq!(hit.unwrap().indices, vec![1, 3]);
//! ```

pub mod cartier;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod twistcube;
pub mod verify;
pub mod walks;

pub use dynkin::{DynkinDiagram, Family};
pub use error::{Error, Result};
pub use twistcube::TwistParams;
pub use walks::Word;
