from . import families as families
from . import treekit as treekit
from .decomposition import DecompositionError as DecompositionError
from .decomposition import MDNode as MDNode
from .decomposition import MDTree as MDTree
from .decomposition import decompose as decompose
from .decomposition import dump as dump
from .decomposition import is_module as is_module
from .decomposition import materialize as materialize
from .decomposition import module_closure as module_closure
from .decomposition import quotient as quotient
from .decomposition import validate as validate
from .families import generate as generate
from .families import parse_family as parse_family
from .graph import Graph as Graph
from .graph import GraphError as GraphError
from .graph import complement as complement
from .graph import components as components
from .graph import disjoint_union_all as disjoint_union_all
from .graph import format_text as format_text
from .graph import from_edge_list as from_edge_list
from .graph import induced as induced
from .graph import join_all as join_all
from .graph import parse_text as parse_text
from .graph import to_networkx as to_networkx
from .hardness import CoBipartite as CoBipartite
from .hardness import ReductionError as ReductionError
from .hardness import reduce_alpha_to_an as reduce_alpha_to_an
from .hardness import reduce_vc_to_pn as reduce_vc_to_pn
from .model import FamilySpec as FamilySpec
from .model import GraphModel as GraphModel
from .model import RunReport as RunReport
from .optimal import JoinParams as JoinParams
from .optimal import MixedSet as MixedSet
from .optimal import OptimalLists as OptimalLists
from .optimal import join_formulas as join_formulas
from .optimal import optimal_lists as optimal_lists
from .optimal import parameters as parameters
from .oracle import SizeGuardError as SizeGuardError
from .oracle import brute_is_mnnp as brute_is_mnnp
from .oracle import brute_is_np as brute_is_np
from .oracle import brute_param as brute_param
from .oracle import contains_induced as contains_induced
from .oracle import is_strongly_np as is_strongly_np
from .recognition import NPVerdict as NPVerdict
from .recognition import Recognition as Recognition
from .recognition import UnsupportedClassError as UnsupportedClassError
from .recognition import Witness as Witness
from .recognition import classify as classify
from .recognition import recognize as recognize
from .structure import ClassificationError as ClassificationError
from .structure import NodeClass as NodeClass
from .structure import is_p4_tidy as is_p4_tidy
from .structure import is_tree_cograph as is_tree_cograph
from .typing import ClassTag as ClassTag
from .typing import OracleConfig as OracleConfig
from .typing import ParamKind as ParamKind
from .validator import ValidationError as ValidationError
from .validator import validate_lists as validate_lists
