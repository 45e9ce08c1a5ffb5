#!python
from __future__ import division,print_function
from pyPose6D.core.Errors import UnknownClass


class ObjectTable(object):
    '''Container for data that is keyed by object class

    **Description**

        Evaluation and training need a handful of values per object class:
        the subsampled model cloud, the object diameter, a display name and
        whether the object is treated as symmetric. This class provides a
        simple interface for setting and storing such values. By default the
        value for every class is `None` so the table can be checked for
        completeness before a long computation starts.

        Like its sibling tables, this container is not meant for mathematics.
        For each class it can hold any Python object.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        diameters = pyPose6D.ObjectTable([1,2,3],name='diameter')

        diameters[1] = 0.17
        diameters[[2,3]] = 0.25

        for i,c,v in diameters:
            print('{}) {} for class {} is {}'.format(i,diameters.name,c,v))

        diameters.check()

    '''
    def __init__(self,classes,name):
        r'''Constructor

        Arguments
        ---------
        classes: list
            Object class ids used to key the table.

        name: string
            The name of the table. Used to identify the table in error
            messages.
        '''
        self.classes = list(classes)
        self.name = name
        self.values = {c:None for c in self.classes}

    def __repr__(self):
        return '<ObjectTable: {} ({} classes)>'.format(self.name,len(self.classes))

    def __iter__(self):
        '''Data iterator

        Yields
        ------
        index: int
            index of value

        class_id:
            object class of value

        value:
            stored value for this class
        '''
        for i,c in enumerate(self.classes):
            yield i,c,self.values[c]

    def __contains__(self,class_id):
        return self.values.get(class_id) is not None

    def __getitem__(self,class_id):
        try:
            value = self.values[class_id]
        except KeyError:
            raise UnknownClass('Class {} is not in ObjectTable {}'.format(class_id,self.name))
        if value is None:
            raise UnknownClass('Class {} has no {} set'.format(class_id,self.name))
        return value

    def __setitem__(self,index,value):
        for c in self.listify(index):
            if c not in self.values:
                self.classes.append(c)
            self.values[c] = value

    def listify(self,values):
        '''Wrap a single class id (or name) into a list of ids'''
        if isinstance(values,(str,int)):
            return [values]
        try:
            return list(values)
        except TypeError:
            return [values]

    def get(self,class_id,default=None):
        value = self.values.get(class_id)
        return default if value is None else value

    def check(self):
        '''Is everything in the table set?

        Raises
        ------
        *UnknownClass* if any class has no value

        '''
        for i,c,val in self:
            if val is None:
                raise UnknownClass('ObjectTable {} is not fully specified (class {})!'.format(self.name,c))

    def setUnset(self,value):
        '''Set all values that have not been specified to a value'''
        for i,c,v in self:
            if v is None:
                self[c] = value
