"""Genetic algorithm for the double coset search problem in Vershik groups."""
from .dcsp import (Chromosome, DcspInstance, cost, in_subgroup, is_solution, load_instance,
                   parse_instance, save_instance)
from .decisions import RandomSource, ScriptedSource
from .ga import DEFAULT_PARAMS, GaConfig, ParameterSet, RunResult, run
from .instances import GeneratedInstance, InstanceSpec, generate, problem_p_subgroups
from .traceback import Recommendation, compute_blocks, evaluate, trace
from .words import (GroupSpec, cancel_geodesic, floor, format_word, invert, labeled_normal_form,
                    normal_form, parse_word, pseudo_normal_form, random_word, reduced_length, roof)

__version__ = "0.1.0"
