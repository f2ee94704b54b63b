"""Integral homology and invertible-polynomial type of links of weighted homogeneous singularities."""

from .alexander import alexander_data, alexander_divisor, betti_via_form, betti_via_subsets, delta_values
from .classify import LinkRecord, classify_link, coprime_fast_path, find_twins
from .covers import branch_cover, cover_delta_form, cover_record, cover_sphere_type, even_degree_split
from .decompose import find_decompositions, preferred_decomposition, render_polynomial, type_label
from .divisor import Divisor, ProductForm, degree_of, eval_product_form, lambda_mul, to_product_form
from .torsion import HomologyGroup, homology, orlik_torsion
from .weights import WeightSystem, make_weight_system, milnor_number, uv_data

__version__ = "0.1.0"
