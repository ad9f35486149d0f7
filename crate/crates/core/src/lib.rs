pub mod exactmath;
pub mod oracles;
pub mod permstats;
pub mod posets;
pub mod zigzag;
