# WittLab package
