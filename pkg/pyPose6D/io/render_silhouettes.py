#!python
from __future__ import division,print_function
import numpy as np
from scipy.spatial import ConvexHull,QhullError
from matplotlib.path import Path
import matplotlib


def class_color(class_id):
    '''Fixed RGB intensity of a class (tab20 palette)'''
    return np.array(matplotlib.colormaps['tab20'](int(class_id) % 20)[:3],dtype=np.float32)


def render_silhouettes(cam,objects):
    r'''Filled convex silhouettes of projected cuboids

    **Description**

        Each object is drawn as the convex hull of its projected corners,
        filled with a flat class color. Objects are painted from the farthest
        to the nearest so that closer objects occlude farther ones. A pixel
        is covered when its center lies inside the hull.

    Arguments
    ---------
    cam: CameraIntrinsics

    objects: list of (corners_uv, depth, color)
        ``corners_uv`` are the (8,2) projected corners in pixels, ``depth``
        the camera-frame depth of the object center and ``color`` an RGB
        triple in [0,1].

    Returns
    -------
    raster: np.ndarray, (height,width,3) float32 in [0,1]
    '''
    raster = np.zeros((cam.height,cam.width,3),dtype=np.float32)
    for corners,_,color in sorted(objects,key=lambda o: -o[1]):
        corners = np.asarray(corners,dtype=np.float64)
        try:
            outline = corners[ConvexHull(corners).vertices]
        except QhullError:
            continue
        lo = np.clip(np.floor(outline.min(axis=0)).astype(int),0,[cam.width,cam.height])
        hi = np.clip(np.ceil(outline.max(axis=0)).astype(int)+1,0,[cam.width,cam.height])
        if np.any(hi <= lo):
            continue
        xs,ys = np.meshgrid(np.arange(lo[0],hi[0]),np.arange(lo[1],hi[1]))
        centers = np.column_stack([xs.ravel()+0.5,ys.ravel()+0.5])
        inside = Path(outline).contains_points(centers).reshape(xs.shape)
        region = raster[lo[1]:hi[1],lo[0]:hi[0]]
        region[inside] = color
    return raster
