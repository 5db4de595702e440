from .edge import Edge as Edge
from .family import CompleteSpec as CompleteSpec
from .family import CycleSpec as CycleSpec
from .family import EdgelessSpec as EdgelessSpec
from .family import FamilySpec as FamilySpec
from .family import FatSpec as FatSpec
from .family import NamedGraph as NamedGraph
from .family import NamedSpec as NamedSpec
from .family import PathSpec as PathSpec
from .family import RandomP4TidySpec as RandomP4TidySpec
from .family import RandomTreeCographSpec as RandomTreeCographSpec
from .family import RandomTreeSpec as RandomTreeSpec
from .family import StarfishSpec as StarfishSpec
from .family import SunSpec as SunSpec
from .family import UrchinSpec as UrchinSpec
from .graphmodel import GraphModel as GraphModel
from .report import RunReport as RunReport
from .report import VerdictModel as VerdictModel
