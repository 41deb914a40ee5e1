"""
Exact combinatorics on finite posets
"""
from causets.poset.finite import (FinitePoset, antichain, build_finite_poset,
                                  chain, minimal_after)
from causets.poset.counting import (count_linear_extensions, count_with_prefix,
                                    first_element_law, nu_uniform,
                                    rank_distribution)
from causets.poset.sampling import enumerate_extensions, sample_uniform_extension
from causets.poset.io import dump_poset, load_poset, poset_from_record
