#!python
r'''
Set matching: a predicted set of N elements is compared against the
groundtruth objects of an image by an optimal one-to-one assignment. The
assignment minimizes a cost built from the class probability and the 2D box
of each pair; unmatched predictions are supervised towards the ∅ ("no
object") class.
'''
from pyPose6D.matching.TargetTuple import TargetTuple
from pyPose6D.matching.PredictionTuple import PredictionTuple
from pyPose6D.matching.PredictionSet import PredictionSet
from pyPose6D.matching.Assignment import Assignment
from pyPose6D.matching.box_ops import box_giou,box_cxcywh_to_xyxy,box_xyxy_to_cxcywh,points_box
from pyPose6D.matching.matching_cost import matching_cost
from pyPose6D.matching.hungarian import hungarian
from pyPose6D.matching.match_sets import match_sets,cost_matrix
