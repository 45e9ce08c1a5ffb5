r'''
Loss terms of the set-prediction objective.

Every loss takes and returns :class:`pyPose6D.core.Tensor` objects so that
it can be differentiated on a :class:`pyPose6D.core.Tape`. Array inputs are
treated as constants. :func:`hungarian_loss` combines the class, box,
keypoint and pose terms of one image into a :class:`LossBreakdown`.
'''
from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.losses.LossBreakdown import LossBreakdown
from pyPose6D.losses.smooth_l1 import smooth_l1
from pyPose6D.losses.class_nll import class_nll
from pyPose6D.losses.giou import giou
from pyPose6D.losses.box_loss import box_loss
from pyPose6D.losses.cross_ratio_loss import cross_ratio_loss,cross_ratio_terms
from pyPose6D.losses.keypoint_loss import keypoint_loss,keypoint_terms
from pyPose6D.losses.rot_loss import rot_loss
from pyPose6D.losses.pose_loss import pose_loss
from pyPose6D.losses.hungarian_loss import hungarian_loss
