mod tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tables.rs"));
}

mod partition_schemes {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/partition_schemes.rs"));
}

mod verify_requirements {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_requirements.rs"));
}

mod two_type_backbone {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/two_type_backbone.rs"));
}

mod chain_bound {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/chain_bound.rs"));
}

mod lifetime_sweep {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lifetime_sweep.rs"));
}

mod rotation_and_sliding {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rotation_and_sliding.rs"));
}


#[test]
fn tables_example_runs() {
    tables::run_example().expect("tables example should run");
}

#[test]
fn partition_schemes_example_runs() {
    partition_schemes::run_example().expect("partition_schemes example should run");
}

#[test]
fn verify_requirements_example_runs() {
    verify_requirements::run_example().expect("verify_requirements example should run");
}

#[test]
fn two_type_backbone_example_runs() {
    two_type_backbone::run_example().expect("two_type_backbone example should run");
}

#[test]
fn chain_bound_example_runs() {
    chain_bound::run_example().expect("chain_bound example should run");
}

#[test]
fn lifetime_sweep_example_runs() {
    lifetime_sweep::run_example().expect("lifetime_sweep example should run");
}

#[test]
fn rotation_and_sliding_example_runs() {
    rotation_and_sliding::run_example().expect("rotation_and_sliding example should run");
}
