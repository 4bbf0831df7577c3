pub mod apply;
pub mod canon;
pub mod chamber;
pub mod decoration;
pub mod fixtures;
pub mod io;
pub mod planar_map;

pub use planar_map::{
    are_isomorphic, Connectivity, Counts, Dart, Generator, MapError, PlaneGraph, RotationSystem,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rotation-systems.md")]
    mod rotation_systems {}
    #[doc = include_str!("../../../book/src/chamber-systems.md")]
    mod chamber_systems {}
    #[doc = include_str!("../../../book/src/decorations.md")]
    mod decorations {}
    #[doc = include_str!("../../../book/src/application.md")]
    mod application {}
    #[doc = include_str!("../../../book/src/goldberg.md")]
    mod goldberg {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    mod connectivity {}
    #[doc = include_str!("../../../book/src/files.md")]
    mod files {}
}
