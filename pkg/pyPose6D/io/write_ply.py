#!python
from __future__ import division,print_function
import numpy as np
from plyfile import PlyData,PlyElement

from pyPose6D.io.atomic_write import atomic_write


def write_ply(path,cloud,binary=True):
    '''Write an (n,3) cloud as PLY vertices (double precision, little-endian when binary)'''
    cloud = np.asarray(cloud,dtype=np.float64).reshape(-1,3)
    vertices = np.empty(cloud.shape[0],dtype=[('x','<f8'),('y','<f8'),('z','<f8')])
    vertices['x'] = cloud[:,0]
    vertices['y'] = cloud[:,1]
    vertices['z'] = cloud[:,2]
    ply = PlyData([PlyElement.describe(vertices,'vertex')],text=not binary,byte_order='<')
    with atomic_write(path,'wb') as f:
        ply.write(f)
