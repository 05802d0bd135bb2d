pub use pyrocast_core as core;
