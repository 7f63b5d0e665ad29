use heller_core::cache::{content_hash, parse_descriptor, read_module, write_module, ModuleCache};
use heller_core::liecore::{lie_klyachko, LieFamily};
use heller_core::symgrp::spec::lambda_subgroup;
use heller_core::symgrp::Group;

#[test]
fn module_file_round_trip() {
    let m = lie_klyachko(3, 2).unwrap();
    let text = write_module(&m, 7);
    let back = read_module(&text).unwrap();
    assert_eq!(back.seed, 7);
    assert_eq!(back.module.label(), m.label());
    assert_eq!(back.module.action(), m.action());
    assert_eq!(write_module(&back.module, 7), text);
}

#[test]
fn modules_of_the_trivial_group_keep_their_dimension() {
    let f = heller_core::field_make(3, 1).unwrap();
    let g = Group::symmetric(1).unwrap();
    let m = heller_core::modrep::Module::regular(&g, &f);
    let back = read_module(&write_module(&m.direct_sum(&m).unwrap(), 0)).unwrap();
    assert_eq!(back.module.dim(), 2);
}

#[test]
fn descriptors_parse_back() {
    for g in [Group::symmetric(4).unwrap(), lambda_subgroup(3, 2).unwrap(), Group::cyclic(1).unwrap()] {
        let h = parse_descriptor(&g.descriptor()).unwrap();
        assert_eq!(h.descriptor(), g.descriptor());
        assert_eq!(h.order(), g.order());
    }
}

#[test]
fn cached_family_matches_cold_build() {
    let dir = tempfile::tempdir().unwrap();
    let cache = ModuleCache::open(dir.path(), 1).unwrap();
    let cold = LieFamily::build_with(2, 1, Some(&cache)).unwrap();
    assert!(cache.load_manifest(2, 1).unwrap().is_some());
    let entries = cache.list().unwrap();
    assert_eq!(entries.len(), cold.members().len());
    let warm = LieFamily::load(2, 1, &cache).unwrap().expect("cache hit");
    for (a, b) in cold.members().iter().zip(warm.members()) {
        assert_eq!(a.label(), b.label());
        assert_eq!(a.dim(), b.dim());
        assert_eq!(content_hash(a), content_hash(b));
        assert_eq!(a.action(), b.action());
        assert_eq!(a.group(), b.group());
    }
    assert!(cache.gc().unwrap().is_empty());
    let victim = &entries[0].hash;
    assert!(cache.remove(victim).unwrap());
    assert!(LieFamily::load(2, 1, &cache).unwrap().is_none());
    std::fs::remove_file(dir.path().join("manifests/2-1.toml")).unwrap();
    assert_eq!(cache.gc().unwrap().len(), entries.len() - 1);
}
