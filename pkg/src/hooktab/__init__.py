"""Bijective hook-content formula, modified jeu de taquin, and exact uniform samplers."""
from .bijection import candidate_cells, compare_paths, hc_forward, hc_inverse
from .filling import (BoxFilling, ContentTabloid, Filling, HookTabloid, PlanePartition,
                      SemistandardTableau, norm, pp_to_ssyt, ssyt_to_pp, validate, violations)
from .jdt import backward_path, forward_path, path_only
from .qcount import LaurentPoly, enumerate_fillings, gf_of, hook_content_gf, verify_fibers, verify_identity
from .sampler import Rng, algorithm_pp, pp_move_bound, random_content_tabloid, sample_pp, sample_ssyt
from .shape import Cell, Partition, cell_stats, cells_in_order, conjugate, parse_partition

__version__ = "0.1.0"
