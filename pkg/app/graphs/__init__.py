"""
Grafos dirigidos: oráculo de conteo, grafo por capas, clasificación y generadores
"""

from .oracle import count_paths_oracle, exact_counts
from .layering import layer_graph, layered_index, layered_node
from .unambiguity import classify, in_stcon_sf, in_stcon_ru
from .generators import (
    gen_chain_figure1,
    gen_diamond_chain,
    gen_random_dag,
    gen_transitive_tournament,
    gen_lange_example,
    gen_cycle,
    disjoint_union
)
from .random_walk import random_walk_hit_probability, exact_hit_probability

__all__ = [
    'count_paths_oracle',
    'exact_counts',
    'layer_graph',
    'layered_index',
    'layered_node',
    'classify',
    'in_stcon_sf',
    'in_stcon_ru',
    'gen_chain_figure1',
    'gen_diamond_chain',
    'gen_random_dag',
    'gen_transitive_tournament',
    'gen_lange_example',
    'gen_cycle',
    'disjoint_union',
    'random_walk_hit_probability',
    'exact_hit_probability'
]
