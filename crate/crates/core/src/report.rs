//! Per-rank catalog: every inertial class with its ordinary quotient,
//! the components of the extended quotient, and their homology.

use serde::Serialize;

use crate::exec::Execution;
use crate::homology::{component_poincare, PoincarePolynomial};
use crate::spectrum::{
    component_catalog, enumerate_inertial_classes, ordinary_quotient_shape, ComponentIndex,
    ComponentShape, InertialClass, Inventory,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogComponent {
    pub component: ComponentIndex,
    pub shape: ComponentShape,
    #[serde(rename = "K")]
    pub k: usize,
    pub poincare: PoincarePolynomial,
    pub hp: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogClass {
    pub class: InertialClass,
    pub ordinary_quotient: Vec<(String, u32)>,
    pub components: Vec<CatalogComponent>,
    pub block_hp: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub n: u32,
    pub inventory: Inventory,
    pub classes: Vec<CatalogClass>,
    pub total_hp: (u64, u64),
}

pub fn catalog_class(cls: &InertialClass) -> CatalogClass {
    let components: Vec<CatalogComponent> = component_catalog(cls)
        .into_iter()
        .map(|c| {
            let poincare = component_poincare(&c.shape);
            CatalogComponent {
                k: c.shape.k(),
                hp: (poincare.even_sum(), poincare.odd_sum()),
                component: c.index,
                shape: c.shape,
                poincare,
            }
        })
        .collect();
    let block_hp = components
        .iter()
        .fold((0, 0), |(e, o), c| (e + c.hp.0, o + c.hp.1));
    CatalogClass {
        class: cls.clone(),
        ordinary_quotient: ordinary_quotient_shape(cls),
        components,
        block_hp,
    }
}

/// Classes are processed independently and reported in enumeration order.
pub fn catalog_report(inv: &Inventory, n: u32, exec: Execution) -> CatalogReport {
    let classes = enumerate_inertial_classes(inv, n);
    let classes = exec.map_slice(&classes, catalog_class);
    let total_hp = classes
        .iter()
        .fold((0, 0), |(e, o), c| (e + c.block_hp.0, o + c.block_hp.1));
    CatalogReport {
        n,
        inventory: inv.clone(),
        classes,
        total_hp,
    }
}
