"""The nodegames command line front end"""
