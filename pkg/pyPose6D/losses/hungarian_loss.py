#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core import ops
from pyPose6D.core.Tensor import Tensor
from pyPose6D.geometry.rotation import gram_schmidt
from pyPose6D.geometry.translation import decode_components
from pyPose6D.losses.LossWeights import LossWeights
from pyPose6D.losses.LossBreakdown import LossBreakdown
from pyPose6D.losses.class_nll import class_nll
from pyPose6D.losses.box_loss import box_loss
from pyPose6D.losses.keypoint_loss import keypoint_terms
from pyPose6D.losses.pose_loss import pose_loss


def _zero(like):
    return Tensor(0.0,dtype=like.dtype)


def hungarian_loss(prediction,targets,assignment,w=None,cam=None,symmetric_classes=(),strict=False):
    r'''Set-prediction loss of one image under a fixed assignment

    **Mathematical Definition**

    .. math::

        \mathcal{L} = \mathcal{L}_{cls} + \frac{1}{M}\sum_{(i,j)} \left[\mathcal{L}_{box}
            + \mathcal{L}_{kp}\right] + \lambda_{pose} \frac{1}{M'}\sum_{(i,j)} \mathcal{L}_{pose}

    **Description**

        The class term covers all N predictions, unmatched ones being pulled
        towards ∅. The box and keypoint terms are averaged over the M matched
        pairs. The pose term is only formed when the prediction carries
        rotation codes, a camera is given and the matched target has a pose
        and model points; it is averaged over those M' pairs. Sums over no
        pairs contribute 0.

        Keypoint cross-ratios are computed with floored denominators unless
        `strict` is set, because early predictions are often degenerate.

    Arguments
    ---------
    prediction: PredictionSet
        Differentiable outputs of the model for one image.

    targets: list of TargetTuple
        Groundtruth, possibly padded with ∅.

    assignment: Assignment
        Output of :func:`pyPose6D.match_sets` for these predictions and
        targets.

    w: LossWeights, *optional*

    cam: CameraIntrinsics, *optional*
        Needed to decode predicted translation codes for the pose term.

    symmetric_classes: iterable of int
        Class ids using the symmetric rotation loss.

    Returns
    -------
    breakdown: LossBreakdown
        ``breakdown.total`` is the tensor to differentiate.
    '''
    if w is None:
        w = LossWeights()
    symmetric_classes = set(int(c) for c in symmetric_classes)
    n = len(prediction)
    pairs = assignment.pairs()

    matched = [None]*n
    for ti,pi in pairs:
        matched[pi] = targets[ti].class_id
    class_loss = class_nll(prediction.logits,matched,w.class_null_weight)

    if not pairs:
        zero = _zero(prediction.logits)
        return LossBreakdown(class_loss,zero,zero,zero,w.pose_weight,keypoint_l1=zero,cross_ratio=zero)

    tidx = np.array([p[0] for p in pairs],dtype=int)
    pidx = np.array([p[1] for p in pairs],dtype=int)
    rep = prediction.representation

    gt_boxes = np.stack([targets[i].box for i in tidx])
    box = box_loss(prediction.boxes[pidx],gt_boxes,w.box_l1,w.box_giou)

    pred_kps = ops.reshape(prediction.keypoints[pidx],(len(pidx),rep.count,2))
    gt_kps = np.stack([targets[i].keypoints.points for i in tidx])
    kp_l1,cr = keypoint_terms(pred_kps,gt_kps,rep,strict=strict)
    keypoint = w.gamma*kp_l1 + w.delta*cr

    pose_terms = []
    if prediction.rot6d is not None and cam is not None:
        for ti,pi in pairs:
            target = targets[ti]
            if target.pose is None or target.model_points is None:
                continue
            R = gram_schmidt(prediction.rot6d[pi])
            code = prediction.translation[pi]
            x,y,z = decode_components(code[0],code[1],code[2],cam)
            t = ops.stack([x,y,z])
            pose_terms.append(pose_loss(target.pose,R,t,target.model_points,
                                        symmetric=target.class_id in symmetric_classes))
    if pose_terms:
        pose = ops.sum(ops.stack(pose_terms))/float(len(pose_terms))
    else:
        pose = _zero(prediction.logits)

    return LossBreakdown(class_loss,box,keypoint,pose,w.pose_weight,keypoint_l1=kp_l1,cross_ratio=cr)
