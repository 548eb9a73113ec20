//! Spherical multiquadrangulations as combinatorial maps.
//!
//! The crate represents embedded multigraphs by rotation systems over darts
//! and provides:
//!
//! * the vertex-splitting and face-contraction surgeries with degree
//!   restrictions, inverse to each other ([`surgery`]);
//! * a canonical code for unsensed, unrooted (optionally vertex-coloured)
//!   map isomorphism ([`canon`]);
//! * exhaustive, isomorph-free generation of all multiquadrangulations by
//!   repeated splitting, together with unique irreducible ancestors
//!   ([`genesis`]);
//! * the census of equilibrium classes of convex bodies read off from
//!   2-coloured quadrangulations ([`equilibrium`]);
//! * text and binary interchange formats ([`io`]).
//!
//! ```
//! use quadforge::map::p2;
//! use quadforge::genesis::generate_levels;
//!
//! let levels = generate_levels(5, 1);
//! let counts: Vec<usize> = levels.iter().map(|l| l.classes.len()).collect();
//! assert_eq!(counts, [1, 3, 7]); // n = 3, 4, 5
//! assert!(p2().is_valid_quadrangulation());
//! ```

pub mod canon;
pub mod equilibrium;
pub mod genesis;
pub mod io;
pub mod map;
pub mod oracle;
pub mod surgery;

mod error;

pub use error::{Error, Result};
pub use map::{Colour, Colouring, EmbeddedMap};
