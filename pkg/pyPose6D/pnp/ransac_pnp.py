#!python
from __future__ import division,print_function
import numpy as np

from pyPose6D.core.Errors import NumericalFailure,DegenerateInput,NoConsensus
from pyPose6D.core.RandomStreams import RandomStreams
from pyPose6D.pnp.RansacConfig import RansacConfig
from pyPose6D.pnp.epnp import epnp,reprojection_errors


def ransac_pnp(c,cam,cfg=None):
    r'''Outlier-robust PnP by hypothesize-and-verify

    **Description**

        Trial ``i`` draws a minimal sample from the substream
        ``('ransac', i)`` of the configured seed, solves it with
        :func:`epnp` and counts the correspondences reprojecting closer than
        the threshold. Trials whose sample cannot be solved are skipped. The
        largest consensus set wins (the earliest one on ties) and the pose is
        refit once with :func:`epnp` on all of its members.

        Because every trial owns its random substream the result depends
        only on the seed, never on evaluation order.

    Arguments
    ---------
    c: Correspondences

    cam: CameraIntrinsics

    cfg: RansacConfig, *optional*

    Returns
    -------
    pose: Pose

    inliers: np.ndarray of bool, (n,)
        Membership of the winning consensus set.

    Raises
    ------
    *NoConsensus* if no hypothesis gathers at least four inliers.
    '''
    if cfg is None:
        cfg = RansacConfig()
    streams = RandomStreams(cfg.seed)
    n = len(c)
    k = min(cfg.sample_size,n)

    best_mask = None
    best_count = 0
    for i in range(cfg.iterations):
        sample = streams.substream('ransac',i).choice(n,k,replace=False)
        try:
            hypothesis = epnp(c.subset(sample),cam)
        except (NumericalFailure,DegenerateInput):
            continue
        mask = reprojection_errors(hypothesis,c.object_points,c.image_points,cam) < cfg.threshold
        count = int(mask.sum())
        if count > best_count:
            best_count = count
            best_mask = mask

    if best_count < c.min_points:
        raise NoConsensus('Best consensus set has {} of {} correspondences (threshold {} px)'.format(
            best_count,n,cfg.threshold))
    try:
        pose = epnp(c.subset(best_mask),cam)
    except DegenerateInput as e:
        raise NoConsensus('Consensus set is degenerate: {}'.format(e))
    return pose,best_mask
