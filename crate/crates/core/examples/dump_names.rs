//! Regenerates `data/orbit_names.tsv`: `cargo run --example dump_names > data/orbit_names.tsv`.

use localsys::balacarter::name_table_records;

fn main() {
    println!("# Bala-Carter names of nilpotent orbits in the exceptional types.");
    println!("# Fields (tab separated): type, weighted Dynkin diagram in Bourbaki order, name.");
    println!("# A leading ~ marks a type A factor of short roots.");
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        for r in name_table_records(t.parse().expect("known type")) {
            println!("{r}");
        }
    }
}
