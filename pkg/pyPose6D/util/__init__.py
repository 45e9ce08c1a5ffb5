r'''
Helpers that do not fall under the other packages: unit conversion at the
dataset boundary and run configuration for the command line.
'''
from pyPose6D.util.UnitConverter import UnitConverter,default_converter
from pyPose6D.util.RunConfig import RunConfig,output_directory
from pyPose6D.util.versions import dependency_versions
