#!python
r'''
Efficient Perspective-n-Point.

The object points are expressed as barycentric combinations of four control
points (three when the object points are coplanar). Their camera-frame
coordinates lie in the null space of a 2n x 12 (2n x 9) system built from
the image observations; the null-space weights ("betas") are fixed by
requiring that inter-control-point distances are preserved. Several
approximations of the betas are refined by Gauss-Newton, each candidate is
turned into a rigid transform by orthogonal Procrustes alignment, and the
candidate with the lowest mean reprojection error wins.
'''
from __future__ import division,print_function
from itertools import combinations

import numpy as np

from pyPose6D.core.Errors import NumericalFailure,DegenerateInput
from pyPose6D.geometry.Pose import Pose
from pyPose6D.geometry.project import MIN_DEPTH

#: order of the beta products (a,b) in the linearized distance system
BETA_PRODUCTS = ((0,0),(0,1),(1,1),(0,2),(1,2),(2,2),(0,3),(1,3),(2,3),(3,3))

#: relative eigenvalue below which the point cloud counts as flat
PLANAR_TOLERANCE = 1e-10

GAUSS_NEWTON_ITERATIONS = 5


def control_points(points):
    r'''Centroid plus principal-direction control points

    Returns
    -------
    cws: np.ndarray, (4,3) or (3,3)
        Three control points are returned for coplanar input.

    Raises
    ------
    *DegenerateInput* if the points are collinear or coincident.
    '''
    c0 = points.mean(axis=0)
    centered = points - c0
    evals,evecs = np.linalg.eigh(centered.T.dot(centered))
    if not evals[2] > 0 or evals[1] <= PLANAR_TOLERANCE*evals[2]:
        raise DegenerateInput('PnP object points are collinear or coincident')
    directions = (2,1) if evals[0] <= PLANAR_TOLERANCE*evals[2] else (2,1,0)
    n = float(points.shape[0])
    return np.array([c0] + [c0 + np.sqrt(evals[k]/n)*evecs[:,k] for k in directions])


def barycentric(points,cws):
    '''(n, n_controls) weights with points = alphas . cws and rows summing to 1'''
    basis = (cws[1:]-cws[0]).T
    coeff = np.linalg.pinv(basis).dot((points-cws[0]).T).T
    return np.column_stack([1.0-coeff.sum(axis=1),coeff])


def _observation_matrix(alphas,uv,cam):
    n,nc = alphas.shape
    M = np.zeros((2*n,3*nc))
    M[0::2,0::3] = alphas*cam.fx
    M[0::2,2::3] = alphas*(cam.cx-uv[:,0])[:,None]
    M[1::2,1::3] = alphas*cam.fy
    M[1::2,2::3] = alphas*(cam.cy-uv[:,1])[:,None]
    return M


def _distance_system(kernel,cws,n_beta):
    nc = cws.shape[0]
    products = [(a,b) for a,b in BETA_PRODUCTS if b < n_beta]
    pairs = list(combinations(range(nc),2))
    L = np.zeros((len(pairs),len(products)))
    rho = np.zeros(len(pairs))
    for j,(p,q) in enumerate(pairs):
        dv = kernel[3*p:3*p+3,:]-kernel[3*q:3*q+3,:]
        for k,(a,b) in enumerate(products):
            L[j,k] = dv[:,a].dot(dv[:,b])*(1.0 if a == b else 2.0)
        rho[j] = np.sum((cws[p]-cws[q])**2)
    return L,rho


def _lstsq(A,b):
    return np.linalg.lstsq(A,b,rcond=None)[0]


def _signed_pair(b_aa,b_ab,b_bb):
    if b_aa < 0:
        beta0 = np.sqrt(-b_aa)
        beta1 = np.sqrt(-b_bb) if b_bb < 0 else 0.0
    else:
        beta0 = np.sqrt(b_aa)
        beta1 = np.sqrt(b_bb) if b_bb > 0 else 0.0
    if b_ab < 0:
        beta0 = -beta0
    return beta0,beta1


def _approximate_betas(L,rho,n_beta):
    '''Initial beta vectors for null-space dimensions 1, 2 and 3'''
    out = []
    if n_beta == 4:
        b4 = _lstsq(L[:,[0,1,3,6]],rho)
        beta0 = np.sqrt(abs(b4[0]))
        if beta0 > 0:
            sign = -1.0 if b4[0] < 0 else 1.0
            out.append(np.array([beta0,sign*b4[1]/beta0,sign*b4[2]/beta0,sign*b4[3]/beta0]))
    else:
        b1 = _lstsq(L[:,[0]],rho)
        out.append(np.array([np.sqrt(abs(b1[0])),0.0]))

    b3 = _lstsq(L[:,:3],rho)
    beta0,beta1 = _signed_pair(b3[0],b3[1],b3[2])
    out.append(np.array([beta0,beta1,0.0,0.0][:n_beta]))

    if n_beta == 4:
        b5 = _lstsq(L[:,:5],rho)
        beta0,beta1 = _signed_pair(b5[0],b5[1],b5[2])
        beta2 = b5[3]/beta0 if beta0 != 0 else 0.0
        out.append(np.array([beta0,beta1,beta2,0.0]))
    return out


def _gauss_newton(L,rho,betas,iterations=GAUSS_NEWTON_ITERATIONS):
    n_beta = len(betas)
    products = [(a,b) for a,b in BETA_PRODUCTS if b < n_beta]
    betas = np.array(betas,dtype=np.float64)
    for _ in range(iterations):
        J = np.zeros((L.shape[0],n_beta))
        bb = np.empty(len(products))
        for k,(a,b) in enumerate(products):
            J[:,a] += L[:,k]*betas[b]
            J[:,b] += L[:,k]*betas[a]
            bb[k] = betas[a]*betas[b]
        residual = rho-L.dot(bb)
        betas = betas + _lstsq(J,residual)
    return betas


def align_rigid(source,target):
    r'''Rotation R and translation t minimizing sum ||target - (R source + t)||^2

    Orthogonal Procrustes via SVD with a determinant correction, so R is
    always a proper rotation.
    '''
    s0 = source.mean(axis=0)
    t0 = target.mean(axis=0)
    H = (target-t0).T.dot(source-s0)
    U,_,Vt = np.linalg.svd(H)
    D = np.diag([1.0,1.0,np.sign(np.linalg.det(U.dot(Vt))) or 1.0])
    R = U.dot(D).dot(Vt)
    return R,t0-R.dot(s0)


def reprojection_errors(pose,object_points,image_points,cam):
    '''Per-point pixel distance; points at depth <= 1e-6 m get ``inf``'''
    X = pose.transform(object_points)
    err = np.full(X.shape[0],np.inf)
    ok = X[:,2] > MIN_DEPTH
    u = cam.fx*X[ok,0]/X[ok,2] + cam.cx
    v = cam.fy*X[ok,1]/X[ok,2] + cam.cy
    err[ok] = np.hypot(u-image_points[ok,0],v-image_points[ok,1])
    return err


def _candidate(betas,kernel,alphas,c,cam):
    ccs = kernel[:,:len(betas)].dot(betas).reshape(-1,3)
    pcs = alphas.dot(ccs)
    if pcs[:,2].mean() < 0:
        pcs = -pcs
    if not np.all(np.isfinite(pcs)):
        return None
    R,t = align_rigid(c.object_points,pcs)
    pose = Pose(R,t,validate=False)
    err = reprojection_errors(pose,c.object_points,c.image_points,cam)
    if not np.all(np.isfinite(err)):
        return None
    return pose,float(err.mean())


def epnp(c,cam):
    r'''Pose from 2D-3D correspondences by EPnP

    **Description**

        Solves for the camera-frame position of the control points as a
        combination of the null-space vectors of the observation system.
        Null-space dimensions 1 to 3 are tried (1 and 2 for coplanar points);
        each initial estimate is refined with five Gauss-Newton steps on the
        control-point distance constraints. Candidates placing any point at
        non-positive depth are rejected.

    Arguments
    ---------
    c: Correspondences
        At least four pairs.

    cam: CameraIntrinsics

    Returns
    -------
    pose: Pose
        Model-to-camera transform with an exactly orthonormal rotation.

    Raises
    ------
    *DegenerateInput* for collinear object points.

    *NumericalFailure* if the eigensolve fails or every candidate places
    points behind the camera.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        cam = pyPose6D.CameraIntrinsics.default()
        kps = pyPose6D.generate_ibb(pyPose6D.Cuboid.unit())
        pose = pyPose6D.Pose.identity(depth=1.0)
        uv = pyPose6D.project(kps,pose,cam)
        pyPose6D.epnp(pyPose6D.Correspondences(kps,uv),cam)

    '''
    cws = control_points(c.object_points)
    alphas = barycentric(c.object_points,cws)
    M = _observation_matrix(alphas,c.image_points,cam)
    try:
        _,evecs = np.linalg.eigh(M.T.dot(M))
    except np.linalg.LinAlgError as e:
        raise NumericalFailure('EPnP eigensolve failed: {}'.format(e))

    n_beta = 4 if cws.shape[0] == 4 else 2
    kernel = evecs[:,:n_beta]
    L,rho = _distance_system(kernel,cws,n_beta)

    best = None
    with np.errstate(invalid='ignore',divide='ignore',over='ignore'):
        for betas in _approximate_betas(L,rho,n_beta):
            try:
                found = _candidate(_gauss_newton(L,rho,betas),kernel,alphas,c,cam)
            except np.linalg.LinAlgError:
                found = None
            if found is not None and (best is None or found[1] < best[1]):
                best = found
    if best is None:
        raise NumericalFailure('No EPnP candidate places all points in front of the camera')
    pose = best[0]
    return Pose(pose.R,pose.t)
