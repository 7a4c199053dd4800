//! The named instances shipped with the engine and their coefficient modules.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraJson, FinDimAlgebra, ModuleRep, Side};
use crate::bialgebroid::{galois_map, BialgebroidData, BialgebroidJson};
use crate::error::{Error, Result};
use crate::instances::fd::*;
use crate::instances::lie::{LieAlgebra, LieJson, LieModule};
use crate::qlinalg::Q;
use crate::ring::FdRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    FiniteDimensional,
    Lie,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceInfo {
    pub name: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    /// Whether the Galois map is expected to be invertible.
    pub hopf: bool,
    pub modules: Vec<&'static str>,
    pub resolutions: Vec<&'static str>,
    /// Deepest bar resolution the CLI will build; Ext/Tor are certified below it.
    pub bar_depth_limit: Option<usize>,
    /// Largest total degree `m + n` for which products are computed with a lifted diagonal.
    pub product_degree_limit: Option<usize>,
}

const NAMES: [&str; 12] = [
    "qz2",
    "qz3",
    "qs3",
    "sweedler",
    "env-dual",
    "env-qxq",
    "env-upper",
    "monoid01",
    "lie-abelian1",
    "lie-abelian2",
    "lie-nonabelian2",
    "lie-sl2",
];

pub fn instance_names() -> &'static [&'static str] {
    &NAMES
}

pub fn info(name: &str) -> Result<InstanceInfo> {
    let fd = |description, hopf, modules: Vec<&'static str>, depth, product| InstanceInfo {
        name: NAMES.iter().find(|n| **n == name).copied().unwrap_or("?"),
        kind: Kind::FiniteDimensional,
        description,
        hopf,
        modules,
        resolutions: vec!["bar"],
        bar_depth_limit: Some(depth),
        product_degree_limit: Some(product),
    };
    let lie = |description, resolutions: Vec<&'static str>, depth| InstanceInfo {
        name: NAMES.iter().find(|n| **n == name).copied().unwrap_or("?"),
        kind: Kind::Lie,
        description,
        hopf: true,
        modules: vec!["trivial", "adjoint", "coadjoint"],
        resolutions,
        bar_depth_limit: depth,
        product_degree_limit: None,
    };
    Ok(match name {
        "qz2" => fd("group algebra of Z/2 over Q", true, vec!["trivial", "sign", "regular"], 8, 4),
        "qz3" => fd("group algebra of Z/3 over Q", true, vec!["trivial", "rotation", "regular"], 6, 3),
        "qs3" => fd("group algebra of S3 over Q", true, vec!["trivial", "sign", "standard", "regular"], 4, 1),
        "sweedler" => fd("Sweedler's 4-dimensional Hopf algebra", true, vec!["trivial", "regular"], 5, 2),
        "env-dual" => fd("A^e for A = Q[e]/(e^2)", true, vec!["trivial", "regular"], 5, 4),
        "env-qxq" => fd("A^e for A = Q x Q", true, vec!["trivial", "regular"], 4, 3),
        "env-upper" => fd("A^e for A = upper triangular 2x2 matrices", true, vec!["trivial", "regular"], 3, 1),
        "monoid01" => fd("monoid algebra of {1, 0}: a bialgebra that is not Hopf", false, vec!["trivial", "regular"], 4, 0),
        "lie-abelian1" => lie("U(g), g abelian of dimension 1", vec!["ce", "bar"], Some(5)),
        "lie-abelian2" => lie("U(g), g abelian of dimension 2", vec!["ce", "bar"], Some(4)),
        "lie-nonabelian2" => lie("U(g), g = <x, y | [x, y] = y>", vec!["ce"], None),
        "lie-sl2" => lie("U(sl2), Chevalley-Eilenberg computations only", vec!["ce"], None),
        _ => return Err(Error::Invalid(format!("unknown instance {name:?}"))),
    })
}

pub fn builtin_instances() -> Vec<InstanceInfo> {
    NAMES.iter().map(|n| info(n).expect("catalog names resolve")).collect()
}

#[derive(Clone, Debug)]
pub enum Instance {
    Fd(FdInstance),
    Lie { name: String, lie: LieAlgebra },
}

#[derive(Clone, Debug)]
pub struct FdInstance {
    pub name: String,
    pub data: BialgebroidData,
    pub group: Option<FiniteGroup>,
    /// The algebra `A` when `U = Aᵉ`.
    pub enveloped: Option<FinDimAlgebra>,
}

impl FdInstance {
    /// The ring used for resolutions; requires the Galois map to be invertible.
    pub fn ring(&self) -> Result<FdRing> {
        Ok(FdRing::from_hopf(galois_map(self.data.clone())?))
    }

    fn u(&self) -> &Arc<FinDimAlgebra> {
        self.data.u()
    }

    /// A named coefficient module on the requested side.
    pub fn module(&self, name: &str, side: Side) -> Result<ModuleRep> {
        let u = self.u().clone();
        let unknown = || Error::Invalid(format!("instance {} has no module {name:?}", self.name));
        match (name, side) {
            ("regular", Side::Left) => Ok(ModuleRep::left_regular(&u)),
            ("regular", Side::Right) => Ok(ModuleRep::right_regular(&u)),
            ("trivial", Side::Left) => Ok(self.data.base_module().clone()),
            ("trivial", Side::Right) => match &self.enveloped {
                Some(a) => enveloping_right_base(a, &u),
                None => Ok(trivial_module(&u, Side::Right, &counit_row(&self.data))),
            },
            _ => {
                let g = self.group.as_ref().ok_or_else(unknown)?;
                let left = match (self.name.as_str(), name) {
                    ("qz2", "sign") => character_module(&u, Side::Left, &[1, -1]),
                    ("qs3", "sign") => character_module(&u, Side::Left, &s3_sign()),
                    ("qs3", "standard") => s3_standard(&u, Side::Left),
                    ("qz3", "rotation") => z3_rotation(&u),
                    _ => return Err(unknown()),
                };
                Ok(match side {
                    Side::Left => left,
                    Side::Right => group_right_from_left(g, &left),
                })
            }
        }
    }
}

pub fn lie_module(name: &str, g: &LieAlgebra, side: Side) -> Result<LieModule> {
    let left = match name {
        "trivial" => LieModule::trivial(g, Side::Left),
        "adjoint" => LieModule::adjoint(g),
        "coadjoint" => LieModule::coadjoint(g),
        _ => return Err(Error::Invalid(format!("Lie instances have no module {name:?}"))),
    };
    Ok(match side {
        Side::Left => left,
        // m·x = −x m, the antipode of U(g)
        Side::Right => left.flip_side(),
    })
}

pub fn load(name: &str) -> Result<Instance> {
    info(name)?;
    let fd = |data, group, enveloped| Instance::Fd(FdInstance { name: name.to_string(), data, group, enveloped });
    let env = |a: FinDimAlgebra| -> Result<Instance> { Ok(fd(enveloping_bialgebroid(a.clone())?, None, Some(a))) };
    let lie = |g| Instance::Lie { name: name.to_string(), lie: g };
    match name {
        "qz2" | "qz3" | "qs3" => {
            let g = match name {
                "qz2" => FiniteGroup::cyclic(2),
                "qz3" => FiniteGroup::cyclic(3),
                _ => FiniteGroup::s3(),
            };
            Ok(fd(group_bialgebra(&g), Some(g), None))
        }
        "sweedler" => Ok(fd(sweedler(), None, None)),
        "env-dual" => env(dual_numbers()),
        "env-qxq" => env(q_times_q()),
        "env-upper" => env(upper_triangular()),
        "monoid01" => Ok(fd(monoid01(), None, None)),
        "lie-abelian1" => Ok(lie(LieAlgebra::abelian(1))),
        "lie-abelian2" => Ok(lie(LieAlgebra::abelian(2))),
        "lie-nonabelian2" => Ok(lie(LieAlgebra::nonabelian2())),
        "lie-sl2" => Ok(lie(LieAlgebra::sl2())),
        _ => unreachable!("info() accepted the name"),
    }
}

/// An instance in exportable form.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceJson {
    Bialgebroid {
        name: String,
        #[serde(flatten)]
        data: BialgebroidJson,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        enveloped: Option<AlgebraJson>,
    },
    Lie(LieJson),
}

impl Instance {
    pub fn name(&self) -> &str {
        match self {
            Instance::Fd(f) => &f.name,
            Instance::Lie { name, .. } => name,
        }
    }

    pub fn to_json(&self) -> InstanceJson {
        match self {
            Instance::Fd(f) => InstanceJson::Bialgebroid {
                name: f.name.clone(),
                data: f.data.to_json(),
                enveloped: f.enveloped.as_ref().map(FinDimAlgebra::to_json),
            },
            Instance::Lie { lie, .. } => InstanceJson::Lie(lie.to_json()),
        }
    }

    pub fn from_json(j: &InstanceJson) -> Result<Self> {
        match j {
            InstanceJson::Bialgebroid { name, data, enveloped } => Ok(Instance::Fd(FdInstance {
                name: name.clone(),
                data: BialgebroidData::from_json(data)?,
                group: None,
                enveloped: enveloped.as_ref().map(FinDimAlgebra::from_json).transpose()?,
            })),
            InstanceJson::Lie(l) => {
                let lie = LieAlgebra::from_json(l)?;
                Ok(Instance::Lie { name: lie.name().to_string(), lie })
            }
        }
    }
}

/// The counit as a row vector, for callers building one-dimensional modules.
pub fn counit_row(d: &BialgebroidData) -> Vec<Q> {
    d.counit_matrix().row(0).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::{check_schauenburg, check_takeuchi};

    #[test]
    fn every_instance_loads_and_round_trips() {
        for name in instance_names() {
            let inst = load(name).unwrap();
            let j = serde_json::to_string(&inst.to_json()).unwrap();
            let back = Instance::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
            assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), j, "{name}");
        }
    }

    #[test]
    fn fd_axioms_and_negative_control() {
        for name in instance_names() {
            let info = info(name).unwrap();
            if let Instance::Fd(f) = load(name).unwrap() {
                assert!(check_takeuchi(&f.data).all_passed(), "{name}");
                match galois_map(f.data.clone()) {
                    Ok(h) => {
                        assert!(info.hopf, "{name}");
                        assert!(check_schauenburg(&h).all_passed(), "{name}");
                    }
                    Err(Error::NotInvertible { .. }) => assert!(!info.hopf, "{name}"),
                    Err(e) => panic!("{name}: {e}"),
                }
            }
        }
    }

    #[test]
    fn named_modules_exist_on_both_sides() {
        for name in instance_names() {
            let info = info(name).unwrap();
            match load(name).unwrap() {
                Instance::Fd(f) => {
                    for m in &info.modules {
                        for side in [Side::Left, Side::Right] {
                            assert_eq!(f.module(m, side).unwrap().side(), side, "{name} {m}");
                        }
                    }
                }
                Instance::Lie { lie, .. } => {
                    for m in &info.modules {
                        assert_eq!(lie_module(m, &lie, Side::Right).unwrap().side(), Side::Right);
                    }
                }
            }
        }
    }
}
